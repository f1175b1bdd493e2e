"""Task-local access to the active FieldConfig.

Algebra functions are pure in their arguments and read the truncation order
and realness flag from here, so concurrently running programs never see each
other's settings.
"""
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator

from nsproj.config import FieldConfig

_field_config: ContextVar[FieldConfig] = ContextVar("nsproj_field_config", default=FieldConfig())


def get_field_config() -> FieldConfig:
    return _field_config.get()


@contextmanager
def using_field_config(config: FieldConfig) -> Iterator[FieldConfig]:
    token = _field_config.set(config)
    try:
        yield config
    finally:
        _field_config.reset(token)
