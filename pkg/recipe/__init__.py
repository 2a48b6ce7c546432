"""Construction recipe language: grammar, parser, printer and evaluator."""
