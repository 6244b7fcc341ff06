from lerchlib.provider.databaseformat import ZeroDatabaseFormat
from lerchlib.provider.csvdatabaseformat import CsvDatabaseFormat
from lerchlib.provider.jsondatabaseformat import JsonDatabaseFormat

class ZeroDatabaseFormatFactory:

    def get_format(self, path=None, format_name=None) -> ZeroDatabaseFormat:
        formats = [CsvDatabaseFormat(), JsonDatabaseFormat()]
        if format_name:
            for database_format in formats:
                if database_format.name == format_name.lower():
                    return database_format

            raise NotImplementedError(f"Unknown zero database format '{format_name}': use 'csv' or 'json'")

        for database_format in formats:
            if str(path).lower().endswith(database_format.extension):
                return database_format

        raise NotImplementedError(f"Ensure the zero database path extension is 'csv' or 'json': {path}")
