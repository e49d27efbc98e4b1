import orjson
from rest_framework import serializers


class CheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    witness = serializers.ListField(child=serializers.IntegerField())
    detail = serializers.CharField(allow_blank=True)


class ReportSerializer(serializers.Serializer):
    subject = serializers.CharField()
    passed = serializers.BooleanField()
    summary = serializers.CharField()
    checks = CheckSerializer(many=True)


class SubvarietiesSerializer(serializers.Serializer):
    de_morgan = serializers.BooleanField()
    kleene = serializers.BooleanField()
    boolean = serializers.BooleanField()
    tense_algebra = serializers.BooleanField()
    kleene_witness = serializers.ListField(child=serializers.IntegerField())
    boolean_witness = serializers.ListField(child=serializers.IntegerField())


class CongruenceSerializer(serializers.Serializer):
    blocks = serializers.ListField(child=serializers.IntegerField())
    num_blocks = serializers.IntegerField()
    classes = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class CongruenceLatticeSerializer(serializers.Serializer):
    size = serializers.IntegerField()
    congruences = CongruenceSerializer(many=True)
    covers = serializers.SerializerMethodField()

    def get_covers(self, lattice):
        return [list(pair) for pair in lattice.order.covers]


class TmsSubsetSerializer(serializers.Serializer):
    mask = serializers.IntegerField()
    points = serializers.ListField(child=serializers.IntegerField())


class AntiIsomorphismSerializer(serializers.Serializer):
    summary = serializers.CharField()
    passed = serializers.BooleanField()
    report = ReportSerializer()
    subsets = TmsSubsetSerializer(many=True)
    images = CongruenceSerializer(many=True)


class CorpusEntrySerializer(serializers.Serializer):
    name = serializers.CharField()
    poset_id = serializers.IntegerField()
    decoration_id = serializers.IntegerField()
    m = serializers.IntegerField()
    points = serializers.IntegerField(source="space.size")
    elements = serializers.IntegerField(source="algebra.size")


class ModelExportSerializer(serializers.Serializer):
    """The flat export of a model; keys absent for the kind are left out."""
    kind = serializers.ChoiceField(choices=("algebra", "space"))
    m = serializers.IntegerField(min_value=1)
    elements = serializers.ListField(child=serializers.CharField(), required=False)
    points = serializers.ListField(child=serializers.CharField(), required=False)
    leq = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    N = serializers.DictField(child=serializers.CharField(), required=False)
    G = serializers.DictField(child=serializers.CharField(), required=False)
    H = serializers.DictField(child=serializers.CharField(), required=False)
    g = serializers.DictField(child=serializers.CharField(), required=False)
    RG = serializers.ListField(child=serializers.ListField(child=serializers.CharField()), required=False)
    RH = serializers.ListField(child=serializers.ListField(child=serializers.CharField()), required=False)


def dump_json(data) -> str:
    return orjson.dumps(data, option=orjson.OPT_INDENT_2).decode()
