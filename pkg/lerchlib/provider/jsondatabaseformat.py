import json
from collections import OrderedDict
import pandas as pd
from lerchlib.provider.databaseformat import ZeroDatabaseFormat
from lerchlib.provider.zerodatabase import ZeroDatabase

class JsonDatabaseFormat(ZeroDatabaseFormat):
    '''JSON zero databases: {"header": {...}, "rows": [{column: value, ...}, ...]}.'''

    @property
    def name(self):
        return "json"

    @property
    def extension(self):
        return ".json"

    def write(self, database, path):
        document = OrderedDict([
            ("header", database.header),
            ("rows", database.rows.to_dict(orient="records")),
        ])

        with open(path, "w") as out_file:
            json.dump(document, out_file, indent=2)
            out_file.write("\n")

    def read(self, path):
        with open(path) as in_file:
            document = json.load(in_file, object_pairs_hook=OrderedDict)

        rows = pd.DataFrame(document.get("rows", []), columns=ZeroDatabase.COLUMNS, dtype=str)
        return ZeroDatabase(document.get("header", {}), rows)
