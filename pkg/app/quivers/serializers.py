from rest_framework import serializers

from .utils.constants import ERROR_MESSAGES, QUIVER_SCHEMA_KEYS


class QuiverSerializer(serializers.Serializer):
    """Validates the quiver JSON schema {"vertices": [...], "arrows": [[s, t], ...]}"""
    vertices = serializers.ListField(
        child=serializers.CharField(trim_whitespace=False, allow_blank=False),
    )
    arrows = serializers.ListField(
        child=serializers.ListField(
            child=serializers.CharField(trim_whitespace=False, allow_blank=False),
            min_length=2,
            max_length=2,
        ),
        allow_empty=True,
    )

    def validate(self, attrs):
        unknown = sorted(set(self.initial_data) - set(QUIVER_SCHEMA_KEYS))
        if unknown:
            raise serializers.ValidationError(
                ERROR_MESSAGES['UNKNOWN_KEYS'].format(keys=', '.join(unknown))
            )
        attrs['arrows'] = [tuple(arrow) for arrow in attrs['arrows']]
        return attrs


class DimVectorField(serializers.Field):
    def to_representation(self, value):
        return value.as_dict()


class ARVertexSerializer(serializers.Serializer):
    id = serializers.CharField()
    dim = DimVectorField()
    orbit = serializers.CharField()
    level = serializers.IntegerField()
    slice_index = serializers.IntegerField()
    projective_of = serializers.CharField(allow_null=True)
    injective_of = serializers.CharField(allow_null=True)


class ARQuiverSerializer(serializers.Serializer):
    quiver = serializers.SerializerMethodField()
    vertices = ARVertexSerializer(many=True)
    arrows = serializers.SerializerMethodField()
    tau = serializers.SerializerMethodField()
    meshes = serializers.SerializerMethodField()

    def get_quiver(self, ar):
        return ar.quiver.to_dict()

    def get_arrows(self, ar):
        return [[source.id, target.id] for source, target in ar.arrows]

    def get_tau(self, ar):
        return [[vertex.id, ar.tau[vertex].id] for vertex in ar.vertices if vertex in ar.tau]

    def get_meshes(self, ar):
        return [
            {'start': mesh.start.id, 'middles': [v.id for v in mesh.middles], 'end': mesh.end.id}
            for mesh in ar.meshes
        ]
