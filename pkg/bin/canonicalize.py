"""
Rewrite the s-expression held by a file in canonical printed form

Usage:
    canonicalize.py [options] <input_file> <output_file>

Options:
    --overwrite    Overwrite the output file [default: False]
    --verbose      Print more information to the screen [default: False]
"""
from __future__ import print_function
import os
import sys
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from sxq.reader import ReadError, read, write

def main(input_file, output, overwrite, verbose):

    if (os.path.isfile(output) and (not overwrite)):
        print("\nOutput file already exists: {}".format(output))
        print("\n\tTo overwrite this file use the \"--overwrite\" argument\n")
        return 1

    with open(input_file, "r", encoding="utf-8") as f:
        text = f.read()

    if (verbose):
        print("\nParsing input...")
    try:
        value = read(text)
    except ReadError as e:
        print("\n{}: {}\n".format(input_file, e))
        return 2

    # write the canonical form to the new file
    with open(output, "w", encoding="utf-8") as f:
        f.write(write(value) + "\n")

    if (verbose):
        print("\nOutput written to: {}\n".format(output))
    return 0

if __name__ == "__main__":
    from docopt import docopt
    args = docopt(__doc__)

    inputfile = args['<input_file>']
    outfile   = args['<output_file>']
    overwrite = args['--overwrite']
    verbose   = args['--verbose']

    sys.exit(main(inputfile, outfile, overwrite, verbose))
