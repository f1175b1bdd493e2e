from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

from langchain_core.tools import BaseTool

from nsproj.errors import TypeMismatch


@dataclass(frozen=True)
class Builtin:
    """A langchain tool that construction scripts can call by name."""

    tool: BaseTool
    arity: Tuple[int, ...]
    predicate: bool = False

    @property
    def name(self) -> str:
        return self.tool.name

    @property
    def description(self) -> str:
        return self.tool.description

    def __call__(self, *args):
        if len(args) not in self.arity:
            raise TypeMismatch(f"{self.name} takes {_arity_text(self.arity)} arguments, got {len(args)}")
        # positional dispatch: script values are not JSON tool input
        return self.tool.func(*args)


BUILTINS: Dict[str, Builtin] = {}


def _arity_text(arity: Tuple[int, ...]) -> str:
    return " or ".join(str(n) for n in arity)


def register(
    tools: Iterable[BaseTool],
    *,
    predicate: bool = False,
    arity: Optional[Mapping[str, Tuple[int, ...]]] = None,
) -> None:
    """Expose ``tools`` to scripts under their tool names.

    The argument count comes from the tool's argument schema; ``arity`` lists
    the accepted counts of variadic tools, whose schema has a single ``args``.
    """
    overrides = arity or {}
    for t in tools:
        counts = overrides.get(t.name, (len(t.args),))
        BUILTINS[t.name] = Builtin(tool=t, arity=tuple(counts), predicate=predicate)


def get_builtin(name: str) -> Optional[Builtin]:
    return BUILTINS.get(name)


def predicate_names() -> Tuple[str, ...]:
    return tuple(sorted(n for n, b in BUILTINS.items() if b.predicate))
