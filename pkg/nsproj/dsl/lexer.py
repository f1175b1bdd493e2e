import re
from dataclasses import dataclass
from typing import Iterator, List

from nsproj.errors import DslSyntaxError

KEYWORDS = frozenset({"let", "point", "line", "matrix", "conic", "assert", "not", "print"})
RESERVED = frozenset({"eps", "i"})

_TOKEN_SPEC = [
    ("NUMBER", r"\d+(?:\.\d+)?"),
    ("ID", r"[A-Za-z_][A-Za-z_0-9]*"),
    ("OP", r"[-+*/^=(),;\[\]]"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("COMMENT", r"#[^\n]*"),
    ("MISMATCH", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, ID, KEYWORD, OP or EOF
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


def tokenize(source: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(source):
        kind, text = match.lastgroup, match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
            continue
        if kind in ("SKIP", "COMMENT"):
            continue
        if kind == "MISMATCH":
            raise DslSyntaxError(f"unexpected character {text!r}", line, column)
        if kind == "ID" and text in KEYWORDS:
            kind = "KEYWORD"
        yield Token(kind, text, line, column)
    yield Token("EOF", "", line, len(source) - line_start + 1)


def token_list(source: str) -> List[Token]:
    return list(tokenize(source))
