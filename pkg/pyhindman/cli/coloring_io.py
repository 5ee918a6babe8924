#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import Coloring

HEADER = 'colors'
MAX_COLORS = 9


def parse_coloring(text):
    """
    Reads the coloring file format: a `colors k` line with 1 <= k <= 9, then a
    line of digits in 1..k where the j-th digit is the color of j. The final
    newline is optional.

    :param text: the file contents
    :type text: str
    :returns: an explicit `pyhindman.commons.databoxes.Coloring`
    :raises: `ColoringFormatError`
    """
    assert isinstance(text, str)
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines = lines[:-1]
    if not lines:
        raise exceptions.ColoringFormatError('Empty coloring file')
    words = lines[0].split(' ')
    if len(words) != 2 or words[0] != HEADER or not words[1].isdigit() or len(words[1]) != 1:
        raise exceptions.ColoringFormatError('Malformed header: "%s"' % lines[0])
    k = int(words[1])
    if not 1 <= k <= MAX_COLORS:
        raise exceptions.ColoringFormatError('Number of colors %d is out of range 1..%d' % (k, MAX_COLORS))
    if len(lines) < 2 or lines[1] == '':
        raise exceptions.ColoringFormatError('Empty coloring body')
    if len(lines) > 2:
        raise exceptions.ColoringFormatError('Unexpected content after line 2')
    colors = []
    for position, char in enumerate(lines[1], start=1):
        if char not in '0123456789':
            raise exceptions.ColoringFormatError('Unexpected byte %r at position %d' % (char, position))
        digit = int(char)
        if not 1 <= digit <= k:
            raise exceptions.ColoringFormatError('digit %d out of range' % digit)
        colors.append(digit)
    return Coloring.explicit(colors, k)


def load_coloring(path):
    """
    Loads an explicit coloring from a file

    :param path: path to the coloring file
    :type path: str
    :returns: an explicit `pyhindman.commons.databoxes.Coloring`
    :raises: `ColoringFormatError` when the file is missing, undecodable or malformed
    """
    if not os.path.isfile(path):
        raise exceptions.ColoringFormatError('Coloring file not found: %s' % path)
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('ascii')
    except UnicodeDecodeError:
        raise exceptions.ColoringFormatError('Coloring file %s is not ASCII' % path)
    return parse_coloring(text)


def save_coloring(coloring, path):
    """
    Writes an explicit coloring in the format read by `load_coloring`

    """
    with open(path, 'w') as f:
        f.write(coloring.to_text())
