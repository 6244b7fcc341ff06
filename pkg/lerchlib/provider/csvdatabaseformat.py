from collections import OrderedDict
import pandas as pd
from lerchlib.provider.databaseformat import ZeroDatabaseFormat
from lerchlib.provider.zerodatabase import ZeroDatabase

class CsvDatabaseFormat(ZeroDatabaseFormat):
    '''
    CSV zero databases: "# key: value" metadata lines followed by the zero
    table with a header row.
    '''

    _comment = "# "

    @property
    def name(self):
        return "csv"

    @property
    def extension(self):
        return ".csv"

    def write(self, database, path):
        with open(path, "w", newline="") as out_file:
            for key, value in database.header.items():
                out_file.write(f"{self._comment}{key}: {value}\n")

            database.rows.to_csv(out_file, index=False)

    def read(self, path):
        header = OrderedDict()
        with open(path) as in_file:
            for line in in_file:
                if not line.startswith(self._comment):
                    break

                key, _, value = line[len(self._comment):].rstrip("\n").partition(": ")
                header[key] = value

        rows = pd.read_csv(path, skiprows=len(header), dtype=str, keep_default_na=False)
        return ZeroDatabase(header, rows)
