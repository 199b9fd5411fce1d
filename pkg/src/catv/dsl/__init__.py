#!/usr/bin/env python3
"""The .catv text format: grammar, declarations, resolution and printing."""
from .ast import Program, ref_text
from .parse import parse_program, parse_program_file
from .printer import print_declaration, print_program, print_workspace
from .workspace import Workspace, check_workspace, load_workspace, parse_workspace, same_declarations

__all__ = [
    "Program", "ref_text", "parse_program", "parse_program_file",
    "print_declaration", "print_program", "print_workspace",
    "Workspace", "check_workspace", "load_workspace", "parse_workspace", "same_declarations",
]
