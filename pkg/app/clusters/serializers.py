from rest_framework import serializers


class DVertexSerializer(serializers.Serializer):
    name = serializers.CharField()
    module = serializers.CharField(source='module.name')
    shift = serializers.IntegerField()


class FundamentalDomainSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    size = serializers.SerializerMethodField()
    vertices = DVertexSerializer(many=True)

    def get_size(self, domain):
        return len(domain)


class MRigidObjectSerializer(serializers.Serializer):
    summands = serializers.SerializerMethodField()
    maximal = serializers.BooleanField()

    def get_summands(self, t):
        return t.names


class NormalizedObjectSerializer(serializers.Serializer):
    original = MRigidObjectSerializer()
    slice = serializers.DictField(source='slice_heights', child=serializers.IntegerField())
    quiver = serializers.SerializerMethodField()
    object = MRigidObjectSerializer()
    identity = serializers.BooleanField(source='is_identity')

    def get_quiver(self, normalized):
        return normalized.quiver.to_dict()


class PerpendicularDataSerializer(serializers.Serializer):
    M = serializers.CharField(source='M.name')
    perpendicular = serializers.SerializerMethodField()
    projectives = serializers.SerializerMethodField()
    h_prime = serializers.SerializerMethodField()

    def get_perpendicular(self, pd):
        return [
            {'module': u.name, 'h_prime_dim': pd.h_prime_modules[u].dim.as_dict()}
            for u in pd.U_members
        ]

    def get_projectives(self, pd):
        return [p.name for p in pd.projectives_of_U]

    def get_h_prime(self, pd):
        return pd.H_prime.to_dict()


class LocalisedObjectSerializer(serializers.Serializer):
    object = MRigidObjectSerializer()
    at = serializers.CharField(source='M.name')
    perpendicular = PerpendicularDataSerializer()
    images_in_D = serializers.SerializerMethodField()
    image = MRigidObjectSerializer()
    maximal = serializers.BooleanField()
    complements = serializers.SerializerMethodField()

    def get_images_in_D(self, localised):
        return [str(y) for y in localised.image_in_D]

    def get_complements(self, localised):
        counts = self.context.get('complement_counts', [])
        return [{'dropped': N.name, 'over_H': count, 'over_H_prime': h_count} for N, count, h_count in counts]


class EndoAlgebraDataSerializer(serializers.Serializer):
    object = MRigidObjectSerializer()
    hom_dims = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    rad_sq_dims = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    arrows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    total_dim = serializers.IntegerField()


class FactorTheoremReportSerializer(serializers.Serializer):
    at = serializers.CharField(source='M.name')
    factor_dims = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    localised_dims = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    h_prime_dims = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    quotient_arrows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    h_prime_arrows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    passed = serializers.BooleanField()


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.CharField()
    checked = serializers.IntegerField()
    failures = serializers.ListField(child=serializers.CharField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if self.context.get('timings'):
            data['elapsed'] = round(instance.elapsed or 0.0, 3)
        return data


class VerificationReportSerializer(serializers.Serializer):
    quiver = serializers.CharField()
    m = serializers.IntegerField()
    passed = serializers.BooleanField()
    capped = serializers.BooleanField()
    checks = CheckResultSerializer(many=True)
    counts = serializers.DictField(child=serializers.IntegerField())
