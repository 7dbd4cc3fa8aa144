import json

from .base import Writer


class JSONWriter(Writer):
    """Indented JSON with keys in document order; identical inputs give identical bytes."""
    format = "json"
    out_suffix = ".json"

    def translate(self, document):
        self.output = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
