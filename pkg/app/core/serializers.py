import json

from rest_framework.renderers import JSONRenderer


class SortedJSONRenderer(JSONRenderer):
    """JSONRenderer with sorted keys and a fixed indent, so reports are byte-stable"""

    def render(self, data, accepted_media_type=None, renderer_context=None):
        if data is None:
            return b''
        return json.dumps(
            data,
            cls=self.encoder_class,
            sort_keys=True,
            indent=2,
            ensure_ascii=self.ensure_ascii,
            allow_nan=not self.strict,
        ).encode('utf-8')


def render_json(data) -> str:
    return SortedJSONRenderer().render(data).decode('utf-8')
