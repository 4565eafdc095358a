from abc import abstractmethod
from typing import Any

from theflow import Function, Node, Param, lazy


class BaseComponent(Function):
    """A component is a parameterised step of an experiment: estimating a norm,
    sampling a random family, running a probe or a verification sweep.

    !!! tip "For each component, the spirit is"
        - Tunables are declared as params, sub-steps as nodes, so that a whole
    experiment can be described, exported and re-created from its config.
        - Inputs are immutable forms and records; the output type is a single
    schema record (or a list of them).
    """

    class Config:
        middleware_switches = {"theflow.middleware.CachingMiddleware": False}

    @abstractmethod
    def run(self, *args, **kwargs) -> Any:
        """Run the component."""
        ...


__all__ = ["BaseComponent", "Param", "Node", "lazy"]
