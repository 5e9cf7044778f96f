"""Reader for the ``[name] input`` / ``=> expected`` fixture files."""
import re
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
_ITEM = re.compile(r"\[(\S+)\]\s*(.*?)\n=>\s*(.*?)(?=\n\[|\Z)", re.S)


def read_golden(name):
    text = (FIXTURES / name).read_text(encoding="utf-8")
    text = "\n".join(line for line in text.splitlines() if not line.startswith("#"))
    out = []
    for key, inp, exp in _ITEM.findall(text):
        inp = inp.strip()
        is_term = inp.startswith("term ")
        if is_term:
            inp = inp[len("term "):]
        out.append((key, inp, " ".join(exp.split()) if "\n" in exp.strip() else exp.strip(), is_term))
    return out
