{
    "description": {"type": "string"},
    "processor_symbols": {"type": "list", "minlength": 1, "required": true,
                          "schema": {"type": "string", "empty": false}},
    "initial": {"type": "string", "required": true},
    "final": {"type": "string", "required": true},
    "tape_symbols": {"type": "list", "minlength": 1, "required": true,
                     "schema": {"type": "string", "empty": false}},
    "blank": {"type": "string", "required": true},
    "transitions": {
        "type": "list",
        "required": true,
        "schema": {
            "type": "dict",
            "schema": {
                "state": {"type": "string", "required": true},
                "read": {"type": "string", "required": true},
                "next_state": {"type": "string", "required": true},
                "write": {"type": "string", "required": true},
                "move": {"type": "integer", "allowed": [-1, 0, 1], "required": true},
                "amplitude": {"type": "list", "minlength": 2, "maxlength": 2, "required": true,
                              "items": [{"type": "number"}, {"type": "number"}]}
            }
        }
    }
}
