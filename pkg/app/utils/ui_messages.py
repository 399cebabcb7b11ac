UI_MESSAGES = {
    # Titles
    "titles": {
        "warning": "Warning",
        "error": "Error",
        "info": "Info",
        "verify": "Verification",
    },
    # Messages
    "messages": {
        "loaded_graph": "Loaded graph with {} vertices and {} edges",
        "using_complement": "Working on the complement graph",
        "verify_passed": "All {} checks passed at m={}",
        "verify_failed": "{} of {} checks failed at m={}",
        "gamma_skipped": "Gamma path skipped: m={} is above the gamma bench limit {}",
        "table_skipped": "Table count skipped: m={} is above the table limit {}",
        "max_k_reached": "Stopped at k={} before O^k vanished; alpha may be larger",
    },
    # Errors
    "errors": {
        "config_error": "Configuration error: {}",
        "config_not_found": "Configuration file '{}' not found.",
        "config_invalid_json": "Configuration file '{}' is not a valid JSON.",
        "parse_error": "Could not parse expression: {}",
        "graph_format": "Malformed graph file: {}",
        "graph_invalid": "Invalid graph: {}",
        "dimension_mismatch": "Operands do not match: {}",
        "size_limit": "Size limit exceeded: {}",
        "index_range": "Index out of range: {}",
        "not_independent": "Not an independent set: {}",
        "file_unreadable": "Cannot read file '{}': {}",
        "no_command": "No command given",
        "unexpected": "An unexpected error occurred: {}",
        "invalid_value": "Invalid value: {}",
        "mixed_basis": "Operands are written in different bases",
    },
}
