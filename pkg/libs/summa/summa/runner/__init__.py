from .config import ExperimentConfig, balanced_partition
from .emit import (
    PROBE_COLUMNS,
    RECORD_COLUMNS,
    emit,
    probe_frame,
    record_row,
    records_frame,
    table_frame,
    write_provenance,
)
from .probes import run_probe
from .sweep import DEFAULT_SUITE, default_suite, run_sweep
from .tables import TableRow, run_tables, table_row
from .verify import (
    BUILTIN_FORMS,
    HOLDS,
    INCONCLUSIVE,
    VIOLATION,
    Verifier,
    resolve_form,
    run_verify,
)

__all__ = [
    "ExperimentConfig",
    "balanced_partition",
    "run_verify",
    "Verifier",
    "resolve_form",
    "BUILTIN_FORMS",
    "HOLDS",
    "VIOLATION",
    "INCONCLUSIVE",
    "run_probe",
    "run_tables",
    "table_row",
    "TableRow",
    "run_sweep",
    "default_suite",
    "DEFAULT_SUITE",
    "emit",
    "write_provenance",
    "record_row",
    "records_frame",
    "probe_frame",
    "table_frame",
    "RECORD_COLUMNS",
    "PROBE_COLUMNS",
]
