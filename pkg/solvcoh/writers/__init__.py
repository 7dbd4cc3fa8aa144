"""
Output formats for result documents.
"""
from .base import Writer
from .json import JSONWriter
from .tsv import TSVWriter
from .notebook import NotebookWriter

WRITERS = (JSONWriter, TSVWriter, NotebookWriter)
