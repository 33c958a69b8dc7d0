"""Exception types shared across the package."""


class ResourceError(ValueError):
    """A resource file (frequency list, embeddings, tag lexicon, exceptions) is missing or malformed."""


class DatasetError(ValueError):
    """A dataset file cannot be parsed."""
