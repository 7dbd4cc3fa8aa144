import json

import nbformat.v4

from .base import Writer


class NotebookWriter(Writer):
    """
    A notebook with a markdown summary of the results and a code cell that reruns the command.
    """
    format = "ipynb"
    out_suffix = ".ipynb"

    def translate(self, document):
        notebook = nbformat.v4.new_notebook()
        notebook.metadata["solvcoh"] = {"schema": document["schema"],
                                        "version": document["provenance"]["version"]}
        notebook.cells.append(nbformat.v4.new_markdown_cell(self._header(document)))
        for key, value in document["results"].items():
            notebook.cells.append(nbformat.v4.new_markdown_cell(self._section(key, value)))
        notebook.cells.append(nbformat.v4.new_code_cell(self._call(document)))
        self.output = nbformat.writes(notebook)

    def _header(self, document):
        lines = ["# solvcoh {}".format(document["command"]), ""]
        for key, value in document["inputs"].items():
            if key == "text":
                continue
            lines.append("- **{}**: `{}`".format(key, json.dumps(value)))
        return "\n".join(lines)

    def _section(self, key, value):
        if isinstance(value, (dict, list)):
            body = "```\n{}\n```".format(json.dumps(value, indent=2, ensure_ascii=False))
        else:
            body = "`{}`".format(value)
        return "## {}\n\n{}".format(key, body)

    def _call(self, document):
        inputs = document["inputs"]
        args = [document["command"]]
        if "catalog" in inputs:
            args += ["--catalog", inputs["catalog"]]
            if inputs.get("params"):
                args += ["--params", ",".join("{}={}".format(k, v) for k, v in inputs["params"].items())]
        elif "file" in inputs:
            args += ["--algebra", inputs["file"]]
        if "tbar" in inputs:
            args += ["--tbar", inputs["tbar"]]
        args += ["--seed", str(document["provenance"]["seed"])]
        return "from solvcoh.cli import main\n\nmain({!r})".format(args)
