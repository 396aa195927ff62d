"""Finite residuated lattices: filters, spectra, socles, semi-simplicity."""

from .algebra import (
    Lattice,
    boolean_center,
    check_element_laws,
    dump_lattice,
    load_lattice,
    power,
    read_lattice,
    star,
)
from .audit import AuditReport, audit
from .errors import (
    AxiomError,
    CapacityExceeded,
    InternalInconsistency,
    NotALattice,
    NotAMonoid,
    OrderOutOfRange,
    ParseError,
    QuerySyntaxError,
    ResiduationFails,
    RlatError,
    TrivialLattice,
)
from .filters import Filter, FilterLattice, all_filters, filter_lattice, generated_filter, principal_filter
from .modelgen import CanonicalForm, canonical_form, enumerate_lattices, parse_query, search

__version__ = "0.1.0"
