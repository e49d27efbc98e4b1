import os
import sys


def main():
    """Console entry point: `tensym <action> ...` runs the tensym management command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tensym.settings')
    from django.core.management import execute_from_command_line

    execute_from_command_line([sys.argv[0], "tensym", *sys.argv[1:]])
