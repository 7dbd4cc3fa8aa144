"""
Tab separated output.

``table1`` documents become one line per row; other documents are flattened to
``key<TAB>value`` lines with dotted keys.
"""
from .base import Writer

TABLE1_COLUMNS = ("group", "tbar", "b1(g)", "b2(g)", "b3(g)", "b1(G/Gamma)", "b2(G/Gamma)", "b3(G/Gamma)",
                  "formality", "sympl-exists", "lefschetz", "status")


def _flag(row, name):
    flag = row.get("flags", {}).get(name)
    if flag is None:
        return ""
    value = flag["computed"]
    if flag["status"] == "n/a":
        return "\\"
    if value is None:
        return "?"
    return "Yes" if value else "No"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten("{}.{}".format(prefix, k) if prefix else str(k), v, out)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, v in enumerate(value):
            _flatten("{}.{}".format(prefix, i), v, out)
    elif isinstance(value, list):
        out.append((prefix, " ".join(str(v) for v in value)))
    else:
        out.append((prefix, "" if value is None else str(value)))


class TSVWriter(Writer):
    format = "tsv"
    out_suffix = ".tsv"

    def translate(self, document):
        if document["command"] == "table1":
            lines = ["\t".join(TABLE1_COLUMNS)]
            for row in document["results"]["rows"]:
                cells = [row["group"], row["tbar"]]
                cells += [str(b) for b in row["algebra_betti"]]
                cells += [str(b) for b in row["quotient_betti"]]
                cells += [_flag(row, "F"), _flag(row, "IS"), _flag(row, "HL"), row["status"]]
                lines.append("\t".join(cells))
        else:
            pairs = []
            _flatten("", document["results"], pairs)
            lines = ["{}\t{}".format(k, v.replace("\n", "\\n")) for k, v in pairs]
        self.output = "\n".join(lines) + "\n"
