"""Exception types shared across the engine, store, ingest and service layers."""

from __future__ import annotations


class SummaryLensError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(SummaryLensError):
    """An embedding-file line could not be parsed."""

    def __init__(self, line_no: int, reason: str = ""):
        self.line_no = line_no
        self.reason = reason
        detail = f": {reason}" if reason else ""
        super().__init__(f"malformed embedding line {line_no}{detail}")


class EmptySource(SummaryLensError):
    """The embedding source contained no lines."""


class DimensionMismatch(SummaryLensError):
    """Two vectors of different lengths were combined."""


class EmptyGraph(SummaryLensError):
    """Ranking was requested on a graph with no nodes."""


class EmptySentenceList(SummaryLensError):
    """Frequency scoring was requested with no sentences."""


class EmptyDocument(SummaryLensError):
    """The document contains no sentences after segmentation."""


class UnsupportedMethod(SummaryLensError):
    """The requested summarization method is recognized but not available."""


class DocumentMismatch(SummaryLensError):
    """A summary was paired with a document it was not produced from."""


class DuplicateId(SummaryLensError):
    """A document with this id already exists in the store."""


class NotFound(SummaryLensError):
    """No stored object under the given key."""


class StorageFailure(SummaryLensError):
    """The underlying filesystem operation failed."""


class EmptyAfterNormalization(SummaryLensError):
    """Ingested text normalized to the empty string."""


class MissingFixtureText(SummaryLensError):
    """A fixture OCR provider was configured without fixture text."""


class ProviderUnreachable(SummaryLensError):
    """The external OCR endpoint could not be reached."""


class ProviderTimeout(SummaryLensError):
    """The external OCR endpoint did not answer in time."""


class ProviderBadResponse(SummaryLensError):
    """The external OCR endpoint answered with an unusable response."""

    def __init__(self, status: int, detail: str = ""):
        self.status = status
        self.detail = detail
        suffix = f" ({detail})" if detail else ""
        super().__init__(f"OCR provider returned status {status}{suffix}")
