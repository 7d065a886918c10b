"""
Integer binary arithmetic coder.

The coder keeps ``low`` and ``high`` registers of ``state_bits`` bits and an
underflow counter for the straddling case. Symbol intervals come from a
cumulative frequency table whose total must not exceed a quarter of the
register range. All state is held in Python integers, so output is identical
on every platform.
"""

import numpy as np

from ..exceptions import CorruptStream

STATE_BITS = 64


class FrequencyTable:
    """Cumulative counts over symbols ``0..k-1``.

    Parameters
    ----------
    freqs : array_like of int
        Positive counts.
    """

    def __init__(self, freqs):
        freqs = np.asarray(freqs, dtype=np.int64)
        self.cumulative = np.concatenate(([0], np.cumsum(freqs)))
        self.total = int(self.cumulative[-1])

    def __len__(self):
        return self.cumulative.size - 1

    def low(self, symbol):
        return int(self.cumulative[symbol])

    def high(self, symbol):
        return int(self.cumulative[symbol + 1])

    def symbol_at(self, value):
        """Symbol whose interval ``[low, high)`` contains `value`."""
        return int(np.searchsorted(self.cumulative, value, side='right')) - 1


class _CoderBase:
    def __init__(self, state_bits=STATE_BITS):
        self.state_bits = state_bits
        self.full_range = 1 << state_bits
        self.half_range = self.full_range >> 1
        self.quarter_range = self.half_range >> 1
        self.max_total = self.quarter_range + 2
        self.state_mask = self.full_range - 1
        self.low = 0
        self.high = self.state_mask

    def _narrow(self, table, symbol):
        if table.total > self.max_total:
            raise ValueError("frequency total exceeds the coder's precision")
        span = self.high - self.low + 1
        new_low = self.low + span * table.low(symbol) // table.total
        self.high = self.low + span * table.high(symbol) // table.total - 1
        self.low = new_low

    def _normalize(self):
        """Shift out settled bits; yields ``('bit', b)`` or ``('underflow', None)``."""
        while True:
            if self.high < self.half_range:
                yield 'bit', 0
            elif self.low >= self.half_range:
                yield 'bit', 1
                self.low -= self.half_range
                self.high -= self.half_range
            elif self.low >= self.quarter_range and self.high < 3 * self.quarter_range:
                yield 'underflow', None
                self.low -= self.quarter_range
                self.high -= self.quarter_range
            else:
                return
            self.low = (self.low << 1) & self.state_mask
            self.high = ((self.high << 1) & self.state_mask) | 1


class ArithmeticEncoder(_CoderBase):
    """Encodes symbols against per-step frequency tables into a byte string."""

    def __init__(self, state_bits=STATE_BITS):
        super().__init__(state_bits)
        self.bits = []
        self.pending = 0
        self.steps = 0

    def _emit(self, bit):
        self.bits.append(bit)
        self.bits.extend([bit ^ 1] * self.pending)
        self.pending = 0

    def encode(self, table, symbol):
        if table.high(symbol) <= table.low(symbol):
            raise ValueError(f"symbol {symbol} has no mass")
        self._narrow(table, symbol)
        for kind, bit in self._normalize():
            if kind == 'bit':
                self._emit(bit)
            else:
                self.pending += 1
        self.steps += 1

    def finish(self):
        """Terminate the stream and return the payload bytes.

        Two more bits (plus pending ones) pick a point inside the final
        interval; a decoder padding with zeros lands on it. A stream with no
        coded steps is empty.
        """
        if self.steps == 0:
            return b''
        self.pending += 1
        self._emit(0 if self.low < self.quarter_range else 1)
        return np.packbits(np.asarray(self.bits, dtype=np.uint8)).tobytes()


class ArithmeticDecoder(_CoderBase):
    """Inverse of :class:`ArithmeticEncoder`; reads zeros past the payload."""

    def __init__(self, payload, state_bits=STATE_BITS):
        super().__init__(state_bits)
        self.bits = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
        self.position = 0
        self.code = 0
        for _ in range(state_bits):
            self.code = (self.code << 1) | self._next_bit()

    def _next_bit(self):
        bit = int(self.bits[self.position]) if self.position < self.bits.size else 0
        self.position += 1
        return bit

    def decode(self, table):
        span = self.high - self.low + 1
        offset = self.code - self.low
        value = ((offset + 1) * table.total - 1) // span
        if not 0 <= value < table.total:
            raise CorruptStream("arithmetic decoder left its interval")
        symbol = table.symbol_at(value)
        self._narrow(table, symbol)
        for kind, bit in self._normalize():
            if kind == 'underflow':
                self.code -= self.quarter_range
            elif bit:
                self.code -= self.half_range
            self.code = ((self.code << 1) & self.state_mask) | self._next_bit()
        return symbol
