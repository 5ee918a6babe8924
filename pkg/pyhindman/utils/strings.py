#!/usr/bin/env python
# -*- coding: utf-8 -*-


def version_tuple_to_str(version_tuple, separator='.'):
    """
    Turns something like (X, Y, Z) into "X.Y.Z"
    :param version_tuple: the tuple identifying a software Semantic version
    :type version_tuple: tuple
    :param separator: the character to be used as separator
    :type separator: str, defaults to '.'
    :return: str
    """
    str_version_tuple = [str(v) for v in version_tuple]
    return separator.join(str_version_tuple)


def format_int_list(values, separator=','):
    """
    Turns an iterable of ints like [1, 2, 4] into "1,2,4"

    :param values: the integers
    :type values: iterable of int
    :param separator: the separator
    :type separator: str, defaults to ','
    :return: str
    """
    return separator.join(str(v) for v in values)


def format_int_set(values):
    """
    Turns an iterable of ints into set notation, eg. "{2,4,6}"

    :param values: the integers
    :type values: iterable of int
    :return: str
    """
    return '{' + format_int_list(values) + '}'


def parse_int_list(text):
    """
    Parses a comma-separated list of naturals such as "1, 2,4". Braces around
    the list are tolerated, an empty string gives an empty list.

    :param text: the text to parse
    :type text: str
    :return: list of int
    :raises: *ValueError* when a token is not a natural number
    """
    assert isinstance(text, str)
    stripped = text.strip()
    if stripped.startswith('{') and stripped.endswith('}'):
        stripped = stripped[1:-1]
    if not stripped.strip():
        return []
    result = []
    for token in stripped.split(','):
        token = token.strip()
        if not token.isdigit():
            raise ValueError('Not a natural number: "%s"' % token)
        result.append(int(token))
    return result


def increasing_naturals(values, positive=True):
    """
    Checks that the supplied values are a strictly increasing list of naturals
    (of positive naturals when `positive` is set) and returns them as a tuple.

    :param values: the values
    :type values: iterable of int
    :param positive: whether the values must be at least 1
    :type positive: bool
    :returns: tuple of int
    :raises: *ValueError* when the values are not increasing or out of range
    """
    result = tuple(values)
    for v in result:
        assert isinstance(v, int) and not isinstance(v, bool), 'Naturals must be ints'
    lowest = 1 if positive else 0
    if result and result[0] < lowest:
        raise ValueError('Elements must be at least %d' % lowest)
    for a, b in zip(result, result[1:]):
        if b <= a:
            raise ValueError('Elements must be strictly increasing: %d is followed by %d' % (a, b))
    return result


def item_label(position, n_generators, instances):
    """
    Label of an item position in a family, "g<i>" for generators and
    "s<j>[<n>]" for schema instances.

    :param position: the item position
    :type position: int
    :param n_generators: how many generators the family has
    :type n_generators: int
    :param instances: the (schema index, n) pairs of the schema instances
    :type instances: list of tuple
    :returns: str
    """
    if position < n_generators:
        return 'g%d' % position
    schema_index, n = instances[position - n_generators]
    return 's%d[%d]' % (schema_index, n)


def describe_exception(exc):
    """
    One-line description of an exception: class name and message

    :param exc: the exception
    :type exc: Exception
    :returns: str
    """
    if str(exc):
        return '%s: %s' % (exc.__class__.__name__, exc)
    return exc.__class__.__name__
