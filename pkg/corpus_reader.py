"""
This module provides a reader that splits corpus text into raw article texts.
"""
import logging

from .utilities import CorpusDecodeException

NO_DELIMITER = "none"


class CorpusReader:
    """
    Hands out the articles of one corpus text. Provides some helper functions.
    """

    def __init__(self, text, delimiter=NO_DELIMITER, source="<text>"):
        """
        Create a new corpus reader.
        :param text: Decoded corpus text.
        :param delimiter: Literal article boundary line, or "none" to treat the whole text as a
                          single article.
        :param source: Name used in log messages.
        :type text: str
        :type delimiter: str
        :type source: str
        """
        self._logger = logging.getLogger(__name__)
        self._buffer = text
        self._pos = 0
        self.delimiter = delimiter
        self.source = source

    @classmethod
    def open(cls, path, delimiter=NO_DELIMITER, encoding="utf-8"):
        """
        Create a reader for a corpus file. The whole file is decoded eagerly so that decode errors
        surface before any article is handed out.
        :param path: Corpus file to read.
        :type path: str | pathlib.Path
        :raises CorpusDecodeException: if the file is not valid in the given encoding.
        :raises OSError: if the file cannot be read.
        """
        with open(path, "rb") as corpus_file:
            raw = corpus_file.read()
        reader = cls(decode(raw, encoding, path), delimiter, str(path))
        reader._logger.debug("Read %d bytes from %s", len(raw), path)
        return reader

    def read_until(self, delimiter):
        """
        Read until a line consisting of delimiter (surrounding whitespace ignored) or until the end
        of the buffer. The delimiter line itself is consumed but not returned.
        :return: Text before the delimiter line, None once the buffer is exhausted.
        :rtype: str | None
        """
        if self._pos >= len(self._buffer):
            return None
        chunk = []
        while self._pos < len(self._buffer):
            end = self._buffer.find("\n", self._pos)
            if end == -1:
                end = len(self._buffer)
            line = self._buffer[self._pos : end]
            self._pos = end + 1
            if line.strip() == delimiter:
                break
            chunk.append(line)
        return "\n".join(chunk)

    def articles(self):
        """
        Yields the raw text of every article in order.
        :rtype: collections.abc.Iterator[str]
        """
        if self.delimiter == NO_DELIMITER:
            if self._buffer:
                yield self._buffer
            return
        while True:
            text = self.read_until(self.delimiter)
            if text is None:
                return
            yield text


def decode(raw, encoding, path="<bytes>"):
    """
    Decodes raw corpus bytes.
    :raises CorpusDecodeException: with the offset of the first undecodable byte.
    :type raw: bytes
    :rtype: str
    """
    try:
        return raw.decode(encoding)
    except UnicodeDecodeError as exc:
        raise CorpusDecodeException(path, exc.start, encoding) from exc
