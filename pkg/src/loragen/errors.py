"""Exception hierarchy shared by every stage of the pipeline."""


class LoragenError(Exception):
    """Base class; the CLI maps these to exit status 1 with a one-line message."""


class ShapeError(LoragenError):
    """Operands with incompatible shapes or axes."""


class InputError(LoragenError):
    """Invalid user-supplied value (token out of vocab, empty sample list, ...)."""


class ConfigError(LoragenError):
    """Invalid or inconsistent run configuration."""


class ParseError(LoragenError):
    """Malformed on-disk artifact; carries a line number when one makes sense."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LayoutError(LoragenError):
    """Flattened vector does not match the adapter layout."""


class TrainingError(LoragenError):
    """Training diverged; carries the epoch where the loss went non-finite."""

    def __init__(self, message, epoch=None):
        if epoch is not None:
            message = f"epoch {epoch}: {message}"
        super().__init__(message)
        self.epoch = epoch


class DependencyError(LoragenError):
    """A pipeline stage ran before the stage that produces its inputs."""

    def __init__(self, missing_stage, detail=""):
        msg = f"missing artifacts from stage '{missing_stage}'; run '{missing_stage}' first"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.missing_stage = missing_stage


class ConditionSourceError(LoragenError):
    """Task vector source does not match the generator's trained conditioning source."""


class ContainerError(LoragenError):
    """Bad magic, version, kind, or payload length in a container file."""


class ConvergenceWarning(UserWarning):
    """Fine-tuning finished below the expected training accuracy."""
