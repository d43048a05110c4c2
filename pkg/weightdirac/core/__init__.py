"""Core components."""

from weightdirac.core.executor import JobExecutor, execute

__all__ = ["JobExecutor", "execute"]
