"""Fixed quiver corpus used across the suite."""

from relginz.quiver import quiver_from_document

DOCS = {
    "empty": {"vertices": [], "arrows": []},
    "one_vertex": {"vertices": ["v"], "arrows": []},
    "one_arrow": {"vertices": ["v", "w"], "arrows": [{"id": "g", "src": "v", "tgt": "w"}]},
    "one_frozen_arrow": {
        "vertices": ["v", "w"],
        "arrows": [{"id": "g", "src": "v", "tgt": "w", "frozen": True}],
        "frozen_vertices": ["v", "w"],
    },
    "loop": {"vertices": ["v"], "arrows": [{"id": "g", "src": "v", "tgt": "v"}]},
    "frozen_loop": {
        "vertices": ["v"],
        "arrows": [{"id": "g", "src": "v", "tgt": "v", "frozen": True}],
        "frozen_vertices": ["v"],
    },
    "kronecker": {
        "vertices": ["v", "w"],
        "arrows": [{"id": "g1", "src": "v", "tgt": "w"}, {"id": "g2", "src": "v", "tgt": "w"}],
    },
    "triangle": {
        "vertices": ["a", "b", "c"],
        "arrows": [
            {"id": "x", "src": "a", "tgt": "b", "frozen": True},
            {"id": "y", "src": "b", "tgt": "c"},
            {"id": "z", "src": "c", "tgt": "a"},
        ],
        "frozen_vertices": ["a", "b"],
    },
    "star": {
        "vertices": ["o", "l1", "l2", "l3", "l4"],
        "arrows": [
            {"id": "s1", "src": "o", "tgt": "l1", "frozen": True},
            {"id": "s2", "src": "l2", "tgt": "o", "frozen": True},
            {"id": "s3", "src": "o", "tgt": "l3"},
            {"id": "s4", "src": "l4", "tgt": "o"},
        ],
        "frozen_vertices": ["o", "l1", "l2"],
    },
}

CORPUS = {name: quiver_from_document(doc) for name, doc in DOCS.items()}
