import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

import orjson
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from algebras.factories import TmsAlgebraFactory
from duality.constructions import complex_algebra, dual_space_with_filters
from duality.factories import TmsSpaceFactory
from modelfile.parser import parse_model
from modelfile.render import render_dot, render_model


class TensymCommandTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)

    def model(self, structure, name="model.mdl"):
        path = self.dir / name
        path.write_text(render_model(structure), encoding="utf-8")
        return str(path)

    def run_command(self, *args):
        out = StringIO()
        call_command("tensym", *args, stdout=out)
        return out.getvalue()

    def failing(self, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command("tensym", *args, stdout=out)
        return caught.exception.returncode, out.getvalue()

    def test_check_passes(self):
        out = self.run_command("check", self.model(TmsAlgebraFactory()))
        self.assertIn("tms-algebra: all 11 checks pass", out)
        self.assertIn("subvarieties: De Morgan, Kleene, Boolean, tense algebra", out)
        self.assertIn("least symmetry degree: 1", out)

    def test_check_reports_witness(self):
        code, out = self.failing("check", self.model(TmsAlgebraFactory(future=(1, 1))))
        self.assertEqual(code, 1)
        self.assertIn("FAIL  T3(H)  witness x=1", out)

    def test_check_json(self):
        data = orjson.loads(self.run_command("check", self.model(TmsAlgebraFactory(kleene=True)), "--report", "json"))
        self.assertTrue(data["report"]["passed"])
        self.assertTrue(data["subvarieties"]["kleene"])
        self.assertFalse(data["subvarieties"]["boolean"])
        self.assertEqual(data["minimal_m"], 1)

    def test_check_space(self):
        out = self.run_command("check", self.model(TmsSpaceFactory(four_cycle=True)))
        self.assertIn("tms-space: all 8 checks pass", out)
        code, _ = self.failing("check", self.model(TmsSpaceFactory(chain_identity=True)))
        self.assertEqual(code, 1)

    def test_parse_error_exit_code(self):
        path = self.dir / "broken.mdl"
        path.write_text("algebra { m: 1 elements: 0 1 $ }", encoding="utf-8")
        code, _ = self.failing("check", str(path))
        self.assertEqual(code, 2)

    def test_missing_file(self):
        code, _ = self.failing("check", str(self.dir / "absent.mdl"))
        self.assertEqual(code, 2)

    def test_undecodable_file(self):
        path = self.dir / "latin1.mdl"
        path.write_bytes(b"\xff")
        code, _ = self.failing("check", str(path))
        self.assertEqual(code, 2)

        path.write_bytes(b"algebra {\n  m: \xff 1\n}")
        with self.assertRaises(CommandError) as caught:
            call_command("tensym", "check", str(path), stdout=StringIO())
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn("line 2, column 6: file is not valid UTF-8", str(caught.exception))

    def test_dual(self):
        space = parse_model(self.run_command("dual", self.model(TmsAlgebraFactory())))
        self.assertEqual(space.size, 1)
        self.assertEqual(space.labels, ("p0",))
        self.assertEqual(space.rel_g, frozenset({(0, 0)}))

    def test_dual_needs_an_algebra(self):
        code, _ = self.failing("dual", self.model(TmsSpaceFactory()))
        self.assertEqual(code, 2)

    def test_complex(self):
        algebra = parse_model(self.run_command("complex", self.model(TmsSpaceFactory(swap=True))))
        self.assertEqual(algebra.size, 4)

    def test_roundtrip(self):
        self.assertIn("sigma: all", self.run_command("roundtrip", self.model(TmsAlgebraFactory(square=True))))
        self.assertIn("epsilon: all", self.run_command("roundtrip", self.model(TmsSpaceFactory(four_cycle=True))))

    def test_congruences_both_methods(self):
        out = self.run_command("congruences", self.model(TmsAlgebraFactory(square=True)))
        self.assertIn("direct: 2 congruences", out)
        self.assertIn("dual: 2 tms-subsets", out)
        self.assertIn("both methods agree", out)

    def test_congruences_dualize_once(self):
        target = "modelfile.management.commands.tensym.dual_space_with_filters"
        with patch(target, wraps=dual_space_with_filters) as dualize:
            out = self.run_command("congruences", self.model(complex_algebra(TmsSpaceFactory(swap=True))), "--method", "dual")
        self.assertEqual(dualize.call_count, 1)
        self.assertIn("dual: 2 tms-subsets", out)

    def test_congruences_json(self):
        path = self.model(TmsAlgebraFactory(kleene=True))
        data = orjson.loads(self.run_command("congruences", path, "--method", "direct", "--report", "json"))
        self.assertEqual(data["direct"]["size"], 2)
        self.assertEqual(data["direct"]["congruences"][0]["blocks"], [0, 1, 2])
        self.assertNotIn("dual", data)

    def test_verify_t2(self):
        out = self.run_command("verify-t2", self.model(TmsAlgebraFactory(kleene=True)))
        self.assertIn("2 congruences ↔ 2 tms-subsets, anti-isomorphism verified", out)

    def test_verify_t2_guard(self):
        path = self.model(complex_algebra(TmsSpaceFactory(four_cycle=True)))
        code, _ = self.failing("verify-t2", path)
        self.assertEqual(code, 3)
        self.assertIn("verified", self.run_command("verify-t2", path, "--guard-size", "16"))

    def test_enumerate(self):
        out_dir = self.dir / "corpus"
        out = self.run_command("enumerate", "--max-size", "1", "--m", "1", "--out", str(out_dir))
        self.assertIn("2 spaces", out)
        self.assertEqual(len(list(out_dir.glob("*.mdl"))), 4)
        self.assertEqual(parse_model((out_dir / "P0-D1-m1.algebra.mdl").read_text()).size, 2)

    def test_enumerate_json(self):
        data = orjson.loads(self.run_command("enumerate", "--max-size", "1", "--report", "json"))
        self.assertEqual([entry["name"] for entry in data], ["P0-D0-m1", "P0-D1-m1"])

    def test_enumerate_guard(self):
        code, _ = self.failing("enumerate", "--max-size", "5")
        self.assertEqual(code, 3)

    def test_enumerate_needs_a_positive_size(self):
        code, _ = self.failing("enumerate", "--max-size", "0")
        self.assertEqual(code, 2)

    def test_dot(self):
        algebra = TmsAlgebraFactory()
        self.assertEqual(self.run_command("dot", self.model(algebra)), render_dot(algebra))
        target = self.dir / "out.dot"
        self.run_command("dot", self.model(algebra), "-o", str(target))
        self.assertEqual(target.read_text(), render_dot(algebra))
