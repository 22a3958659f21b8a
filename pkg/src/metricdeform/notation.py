"""Text notation shared by fixtures and CLI output.

Linear combinations are written with coefficient expressions in front of
basis symbols: ``e3 + s*e4``, ``-1/2*e^{3,4}_1``, ``lambda*e5``.  Indices
in the text are 1-based.
"""

import re

from .exactfield import ONE, ParseError, parse_scalar

VECTOR_SYMBOL = re.compile(r"e(\d+)$")
LABEL_SYMBOL = re.compile(r"f(\d+)$")
COCHAIN_SYMBOL = re.compile(r"e\^\{(\d+(?:\s*,\s*\d+)*)?\}_\{?(\d+)\}?$")


def split_top(text, seps):
    """Split on any char in ``seps`` outside parentheses and braces."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def _signed_terms(text):
    """Split ``a - b + c`` into signed terms at top-level +/-."""
    terms, depth, cur, sign = [], 0, "", 1
    prev = ""
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        # a sign directly after an operator belongs to the coefficient
        if depth == 0 and ch in "+-" and not cur.strip():
            sign = -sign if ch == "-" else sign
        elif depth == 0 and ch in "+-" and prev not in ("*", "/", "^", "("):
            if cur.strip():
                terms.append((sign, cur.strip()))
            cur, sign = "", (1 if ch == "+" else -1)
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def parse_combination(text, symbol=VECTOR_SYMBOL, lead="e"):
    """Parse ``c1*sym1 + c2*sym2 ...`` into ``[(coef, match), ...]``.

    ``lead`` is the first character of every symbol.
    """
    text = text.strip()
    if text in ("0", ""):
        return []
    out = []
    for sign, term in _signed_terms(text):
        m = None
        for cut in range(len(term)):
            if term[cut] == lead and (cut == 0 or term[cut - 1] in "* "):
                m = symbol.match(term[cut:].strip())
                if m:
                    break
        if m is None:
            raise ParseError(f"cannot read term {term!r}", None, text)
        coef_txt = term[:cut].strip().rstrip("*").strip()
        coef = parse_scalar(coef_txt) if coef_txt else ONE
        out.append((coef if sign > 0 else -coef, m))
    return out


def parse_vector(text, dim):
    """``"e3 + s*e4"`` -> coordinate list of length ``dim``."""
    from .exactfield import ZERO
    v = [ZERO] * dim
    for c, m in parse_combination(text, VECTOR_SYMBOL):
        k = int(m.group(1)) - 1
        if not 0 <= k < dim:
            raise ValueError(f"basis index e{k + 1} out of range 1..{dim}")
        v[k] = v[k] + c
    return v


def render_combination(items):
    """``[(coef, symbol_text)]`` -> ``"c1*sym1 - sym2"``."""
    out = ""
    for c, sym in items:
        txt = str(c)
        neg = txt.startswith("-") and "+" not in txt[1:] and " - " not in txt[1:]
        if neg:
            txt = txt[1:]
        if txt == "1":
            body = sym
        elif re.fullmatch(r"[\w/^*]+", txt) or (txt.startswith("(") and txt.endswith(")")
                                                and _balanced(txt[1:-1])):
            body = f"{txt}*{sym}"
        else:
            body = f"({txt})*{sym}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out or "0"


def _balanced(s):
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def render_vector(v):
    return render_combination([(c, f"e{k + 1}") for k, c in enumerate(v) if c])
