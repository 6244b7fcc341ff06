import sys
from lerchlib.scripts import lercheval
from lerchlib.scripts import lerchzeros
from lerchlib.scripts import lerchtable
from lerchlib.scripts import lerchverify
from lerchlib.scripts import lerchdeep

commands = {
    "eval": lercheval.cli,
    "zeros": lerchzeros.cli,
    "table": lerchtable.cli,
    "verify": lerchverify.cli,
    "deep": lerchdeep.cli,
}

def main():
    if len(sys.argv) < 2 or sys.argv[1] not in commands:
        sys.stderr.write(f"usage: python -m lerchlib {{{','.join(commands)}}} [options]\n")
        sys.exit(2)

    command = sys.argv.pop(1)
    sys.argv[0] = f"lerchlib {command}"
    commands[command]()

if __name__ == "__main__":
    main()
