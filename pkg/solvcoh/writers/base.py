import codecs
import logging
import os.path

logger = logging.getLogger(__name__)


class Writer:
    """
    Renders a result document to text.

    Subclasses implement :meth:`translate`, which sets ``self.output``.
    """
    format = None
    out_suffix = None

    def __init__(self, app):
        self.app = app
        self.config = app.config
        self.output = None

    def translate(self, document):
        raise NotImplementedError

    def write(self, document):
        self.translate(document)
        return self.output

    def save(self, document, outfilename):
        """Write to ``outfilename``; returns False and warns when the file cannot be written."""
        self.write(document)
        directory = os.path.dirname(outfilename)
        try:
            if directory:
                os.makedirs(directory, exist_ok=True)
            with codecs.open(outfilename, "w", "utf-8") as f:
                f.write(self.output)
        except (IOError, OSError) as err:
            logger.warning("error writing file %s: %s", outfilename, err)
            return False
        return True
