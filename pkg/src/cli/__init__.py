from cli.main import build_parser, main
