"""Chart renderer for qcoherence fig1 CSV files."""

from .cli import (
    EXPECTED_HEADER,
    Fig1Row,
    MalformedCsv,
    RowInvariantViolation,
    load_rows,
    main,
    render_figure,
    validate_rows,
)

__version__ = "0.1.0"
