import sys

from darbouxverifier.aux.arguments import process_arguments


def main():
    sys.exit(process_arguments())
