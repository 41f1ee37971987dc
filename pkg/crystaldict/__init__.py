"""Crystal graphs of multisegments and Kleshchev multipartitions."""

__version__ = "0.1.0"
