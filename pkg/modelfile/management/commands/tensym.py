import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from algebras.axioms import classify, minimal_symmetry_degree, validate_tms_algebra
from algebras.partitions import Congruence
from algebras.structures import TmsAlgebra
from congruences.bruteforce import congruences_bruteforce
from congruences.subsets import theta, tms_subsets
from congruences.verification import verify_anti_isomorphism
from duality.constructions import complex_algebra, dual_space, dual_space_with_filters, epsilon_iso, sigma_iso
from duality.spaces import TmsSpace, validate_tms_space
from enumeration.corpus import build_corpus
from modelfile.parser import parse_model
from modelfile.render import export_model, render_dot, render_model
from modelfile.serializers import (
    AntiIsomorphismSerializer,
    CongruenceLatticeSerializer,
    CongruenceSerializer,
    CorpusEntrySerializer,
    ModelExportSerializer,
    ReportSerializer,
    SubvarietiesSerializer,
    TmsSubsetSerializer,
    dump_json,
)
from tensym.exceptions import ParseError, SemanticError, SizeGuard, TensymError
from tensym.reports import Report

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

WITNESS_NAMES = ("x", "y", "z", "w")


def format_witness(witness: tuple[int, ...]) -> str:
    if len(witness) <= len(WITNESS_NAMES):
        return ", ".join(f"{name}={value}" for name, value in zip(WITNESS_NAMES, witness))
    return str(witness)


def format_report(report: Report) -> str:
    lines = [report.summary()]
    for check in report.checks:
        line = f"  {'ok' if check.passed else 'FAIL':<5} {check.name}"
        if not check.passed:
            if check.witness:
                line += f"  witness {format_witness(check.witness)}"
            if check.detail:
                line += f"  ({check.detail})"
        lines.append(line)
    return "\n".join(lines)


def format_congruence(congruence: Congruence, labels: tuple[str, ...]) -> str:
    return " ".join("{" + ",".join(labels[x] for x in cls) + "}" for cls in congruence.classes())


class Command(BaseCommand):
    help = "Validate, dualize and compute congruences of tense m-symmetric algebras and tms-spaces."

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)

        def action(name, description, model=True):
            sub = actions.add_parser(name, help=description)
            if model:
                sub.add_argument("file", help="model file")
            sub.add_argument("--report", choices=("text", "json"), default="text")
            sub.add_argument("--guard-size", dest="guard_size", type=int, default=None,
                             help="largest algebra accepted by congruence computations")
            return sub

        action("check", "validate the axioms and classify")
        action("dual", "print the dual space of an algebra")
        action("complex", "print the complex algebra of a space")
        action("roundtrip", "verify the sigma or epsilon isomorphism")
        congruences = action("congruences", "list the congruences of an algebra")
        congruences.add_argument("--method", choices=("direct", "dual", "both"), default="both")
        action("verify-t2", "verify the anti-isomorphism between tms-subsets and congruences")
        enumerate_ = action("enumerate", "enumerate tms-spaces and their complex algebras", model=False)
        enumerate_.add_argument("--max-size", dest="max_size", type=int, required=True)
        enumerate_.add_argument("--m", dest="degrees", type=int, nargs="+", default=[1])
        enumerate_.add_argument("--out", default=None, help="directory receiving one model file per structure")
        dot = action("dot", "render a model as a Graphviz digraph")
        dot.add_argument("-o", "--output", default=None)

    def handle(self, *args, **options):
        action = options["action"]
        logger.info("tensym %s", action)
        try:
            getattr(self, f"handle_{action.replace('-', '_')}")(options)
        except SizeGuard as exc:
            raise CommandError(str(exc), returncode=EXIT_GUARD) from exc
        except (TensymError, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT) from exc

    # --- helpers ---
    def load(self, options) -> TmsAlgebra | TmsSpace:
        data = Path(options["file"]).read_bytes()
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            line_start = data.rfind(b"\n", 0, exc.start) + 1
            line = data.count(b"\n", 0, exc.start) + 1
            raise ParseError("file is not valid UTF-8", line, exc.start - line_start + 1) from exc
        return parse_model(text)

    def load_algebra(self, options) -> TmsAlgebra:
        structure = self.load(options)
        if not isinstance(structure, TmsAlgebra):
            raise SemanticError(f"{options['action']} expects an algebra model")
        return structure

    def load_space(self, options) -> TmsSpace:
        structure = self.load(options)
        if not isinstance(structure, TmsSpace):
            raise SemanticError(f"{options['action']} expects a space model")
        return structure

    def emit(self, options, data, text: str) -> None:
        self.stdout.write(dump_json(data) if options["report"] == "json" else text)

    def finish(self, passed: bool, message: str) -> None:
        if not passed:
            raise CommandError(message, returncode=EXIT_FAILED)

    # --- actions ---
    def handle_check(self, options):
        structure = self.load(options)
        if isinstance(structure, TmsSpace):
            report = validate_tms_space(structure)
            self.emit(options, {"report": ReportSerializer(report).data}, format_report(report))
            self.finish(report.passed, report.summary())
            return

        report = validate_tms_algebra(structure)
        data = {"report": ReportSerializer(report).data}
        text = [format_report(report)]
        if report.passed:
            subvarieties = classify(structure)
            degree = minimal_symmetry_degree(structure)
            data["subvarieties"] = SubvarietiesSerializer(subvarieties).data
            data["minimal_m"] = degree
            flags = [name for name, flag in (
                ("De Morgan", subvarieties.de_morgan),
                ("Kleene", subvarieties.kleene),
                ("Boolean", subvarieties.boolean),
                ("tense algebra", subvarieties.tense_algebra),
            ) if flag]
            text.append(f"subvarieties: {', '.join(flags) or 'none'}")
            text.append(f"least symmetry degree: {degree}")
        else:
            logger.info("validation failed: %s", ", ".join(c.name for c in report.failures()))
        self.emit(options, data, "\n".join(text))
        self.finish(report.passed, report.summary())

    def handle_dual(self, options):
        space = dual_space(self.load_algebra(options))
        self.emit(options, ModelExportSerializer(export_model(space)).data, render_model(space))

    def handle_complex(self, options):
        algebra = complex_algebra(self.load_space(options))
        self.emit(options, ModelExportSerializer(export_model(algebra)).data, render_model(algebra))

    def handle_roundtrip(self, options):
        structure = self.load(options)
        _, report = sigma_iso(structure) if isinstance(structure, TmsAlgebra) else epsilon_iso(structure)
        self.emit(options, {"report": ReportSerializer(report).data}, format_report(report))
        self.finish(report.passed, report.summary())

    def handle_congruences(self, options):
        algebra = self.load_algebra(options)
        method = options["method"]
        data, text = {}, []
        direct = dual = None
        if method in ("direct", "both"):
            lattice = congruences_bruteforce(algebra, options["guard_size"])
            direct = set(lattice.congruences)
            data["direct"] = CongruenceLatticeSerializer(lattice).data
            text.append(f"direct: {lattice.size} congruences")
            text.extend(f"  {format_congruence(c, algebra.labels)}" for c in lattice.congruences)
        if method in ("dual", "both"):
            space, family = dual_space_with_filters(algebra)
            subsets = tms_subsets(space)
            images = [theta(algebra, family, subset.mask) for subset in subsets]
            dual = set(images)
            data["dual"] = {
                "subsets": TmsSubsetSerializer(subsets, many=True).data,
                "congruences": CongruenceSerializer(images, many=True).data,
            }
            text.append(f"dual: {len(subsets)} tms-subsets")
            text.extend(
                f"  {list(subset.points)} -> {format_congruence(image, algebra.labels)}"
                for subset, image in zip(subsets, images)
            )
        agree = direct is None or dual is None or direct == dual
        if method == "both":
            data["agree"] = agree
            text.append("both methods agree" if agree else "methods DISAGREE")
        self.emit(options, data, "\n".join(text))
        self.finish(agree, "direct and dual congruences differ")

    def handle_verify_t2(self, options):
        result = verify_anti_isomorphism(self.load_algebra(options), options["guard_size"])
        text = result.summary() if result.passed else f"{result.summary()}\n{format_report(result.report)}"
        self.emit(options, AntiIsomorphismSerializer(result).data, text)
        self.finish(result.passed, result.report.summary())

    def handle_enumerate(self, options):
        corpus = build_corpus(options["max_size"], set(options["degrees"]))
        out = Path(options["out"]) if options["out"] else None
        if out is not None:
            out.mkdir(parents=True, exist_ok=True)
        lines = [f"{len(corpus)} spaces"]
        for entry in corpus:
            lines.append(f"  {entry.name}: {entry.space.size} points, {entry.algebra.size} elements")
            if out is not None:
                (out / f"{entry.name}.space.mdl").write_text(render_model(entry.space), encoding="utf-8")
                (out / f"{entry.name}.algebra.mdl").write_text(render_model(entry.algebra), encoding="utf-8")
        self.emit(options, CorpusEntrySerializer(corpus.entries, many=True).data, "\n".join(lines))

    def handle_dot(self, options):
        text = render_dot(self.load(options))
        if options["output"]:
            Path(options["output"]).write_text(text, encoding="utf-8")
            return
        self.stdout.write(text, ending="")
