class ZeroDatabaseFormat:
    '''
    Base class for reading and writing ZeroDatabases. Subclass to support
    different file formats, i.e. CSV.
    '''

    @property
    def name(self):
        '''The format name.'''
        raise NotImplementedError()

    @property
    def extension(self):
        '''The file extension, including the leading dot.'''
        raise NotImplementedError()

    def write(self, database, path):
        '''Writes a ZeroDatabase to the specified path.'''
        raise NotImplementedError()

    def read(self, path):
        '''Reads a ZeroDatabase from the specified path.'''
        raise NotImplementedError()
