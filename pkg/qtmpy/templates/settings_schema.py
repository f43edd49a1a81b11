{
    "validation_tolerance": {"type": "number", "min": 0, "required": true},
    "distribution_tolerance": {"type": "number", "min": 0, "required": true},
    "oracle_cells": {"type": "integer", "min": 3, "required": true},
    "oracle_max_dimension": {"type": "integer", "min": 1, "required": true},
    "seed": {"type": "integer", "min": 0, "nullable": true, "required": true}
}
