"""Exception hierarchy shared across the package."""


class WavesumError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(WavesumError):
    """Invalid or inconsistent configuration (unknown wavelet, bad flag, ...)."""


class DegenerateInputError(WavesumError):
    """Input too small or empty for the requested operation."""


class DocumentTooShortError(DegenerateInputError):
    """Document has too few sentences to decompose (pipeline falls back to identity)."""


class ShapeError(WavesumError):
    """Mismatched array shapes or lengths."""


class LevelOverflowError(WavesumError):
    """Requested more decomposition levels than the signal length allows."""

    def __init__(self, requested: int, max_level: int):
        self.requested = requested
        self.max_level = max_level
        super().__init__(
            f"level {requested} exceeds the maximum feasible level {max_level}"
        )


class EmptyDocumentError(WavesumError):
    """Document text contains no sentences."""


class CorpusParseError(WavesumError):
    """Malformed corpus line; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ProviderError(WavesumError):
    """Embedding provider failure (bad response, zero vector, dim mismatch)."""


class CacheMissError(ProviderError):
    """Sentence embedding not present in the file cache; carries the content hash."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"embedding cache miss for key {key}")


class TransportError(WavesumError):
    """HTTP request failed after all retries; carries the attempt count."""

    def __init__(self, message: str, attempts: int):
        self.attempts = attempts
        super().__init__(f"{message} (after {attempts} attempts)")


class PipelineError(WavesumError):
    """Failure inside the summarization pipeline, tagged with the stage name."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")
