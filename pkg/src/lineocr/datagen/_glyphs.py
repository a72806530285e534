"""Generated by tools/build_fonts.py. Do not edit."""

CELL_HEIGHT = 16

FONT_A = {
    ' ': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '!': ['000000', '000000', '000000', '000000', '000000', '011000', '011000', '011000', '011000', '000000', '011000', '000000', '000000', '000000', '000000', '000000'],
    '"': ['000000', '000000', '000000', '000000', '000000', '010100', '010100', '010100', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '#': ['000000', '000000', '000000', '000000', '010100', '010100', '111110', '010100', '010100', '111110', '010100', '010100', '000000', '000000', '000000', '000000'],
    '$': ['000000', '000000', '000000', '001000', '011110', '110010', '111100', '011110', '000110', '110110', '111100', '001000', '000000', '000000', '000000', '000000'],
    '%': ['000000', '000000', '000000', '000000', '111000', '101010', '111100', '001000', '011110', '101010', '001110', '000000', '000000', '000000', '000000', '000000'],
    '&': ['000000', '000000', '000000', '000000', '000000', '011100', '110000', '011000', '111110', '101100', '111110', '000000', '000000', '000000', '000000', '000000'],
    "'": ['000000', '000000', '000000', '000000', '001100', '001000', '010000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '(': ['000000', '000000', '000000', '000000', '000100', '001000', '011000', '011000', '011000', '011000', '001000', '000100', '000000', '000000', '000000', '000000'],
    ')': ['000000', '000000', '000000', '000000', '010000', '001000', '001100', '001100', '001100', '001100', '001000', '010000', '000000', '000000', '000000', '000000'],
    '*': ['000000', '000000', '000000', '000000', '001000', '111100', '011000', '100100', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '+': ['000000', '000000', '000000', '000000', '000000', '001000', '001000', '111110', '001000', '001000', '000000', '000000', '000000', '000000', '000000', '000000'],
    ',': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '001100', '001000', '010000', '000000', '000000', '000000'],
    '-': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '111110', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '.': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '011000', '000000', '000000', '000000', '000000', '000000'],
    '/': ['000000', '000000', '000000', '000000', '000010', '000010', '000100', '000100', '001000', '001000', '010000', '010000', '000000', '000000', '000000', '000000'],
    '0': ['000000', '000000', '000000', '000000', '011100', '110110', '110110', '110110', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    '1': ['000000', '000000', '000000', '000000', '001100', '111100', '001100', '001100', '001100', '001100', '111111', '000000', '000000', '000000', '000000', '000000'],
    '2': ['000000', '000000', '000000', '000000', '011100', '110110', '000110', '001100', '011000', '110110', '111110', '000000', '000000', '000000', '000000', '000000'],
    '3': ['000000', '000000', '000000', '000000', '011100', '110110', '000110', '011100', '000110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    '4': ['000000', '000000', '000000', '000000', '000110', '001110', '010110', '110110', '111111', '000110', '000110', '000000', '000000', '000000', '000000', '000000'],
    '5': ['000000', '000000', '000000', '000000', '111110', '110000', '111100', '110110', '000110', '100110', '111100', '000000', '000000', '000000', '000000', '000000'],
    '6': ['000000', '000000', '000000', '000000', '011100', '110110', '110000', '111100', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    '7': ['000000', '000000', '000000', '000000', '111110', '110110', '000110', '001100', '001100', '011000', '011000', '000000', '000000', '000000', '000000', '000000'],
    '8': ['000000', '000000', '000000', '000000', '011100', '110110', '110110', '011100', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    '9': ['000000', '000000', '000000', '000000', '011100', '110110', '110110', '011110', '000110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    ':': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '011000', '000000', '000000', '011000', '000000', '000000', '000000', '000000', '000000'],
    ';': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '011000', '000000', '000000', '011000', '010000', '100000', '000000', '000000', '000000'],
    '<': ['000000', '000000', '000000', '000000', '000000', '001100', '011000', '110000', '011000', '001100', '000000', '000000', '000000', '000000', '000000', '000000'],
    '=': ['000000', '000000', '000000', '000000', '000000', '000000', '111100', '000000', '111100', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '>': ['000000', '000000', '000000', '000000', '000000', '011000', '001100', '000110', '001100', '011000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '?': ['000000', '000000', '000000', '000000', '000000', '011100', '100110', '001100', '011000', '000000', '011000', '000000', '000000', '000000', '000000', '000000'],
    '@': ['000000', '000000', '000000', '000000', '011100', '110010', '100110', '101010', '101010', '100111', '110000', '011100', '000000', '000000', '000000', '000000'],
    'A': ['000000', '000000', '000000', '000000', '000000', '111100', '011100', '010100', '111110', '110110', '110111', '000000', '000000', '000000', '000000', '000000'],
    'B': ['000000', '000000', '000000', '000000', '000000', '111100', '110110', '111100', '110110', '110110', '111100', '000000', '000000', '000000', '000000', '000000'],
    'C': ['000000', '000000', '000000', '000000', '000000', '011110', '110110', '110000', '110000', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    'D': ['000000', '000000', '000000', '000000', '000000', '111100', '110110', '110110', '110110', '110110', '111100', '000000', '000000', '000000', '000000', '000000'],
    'E': ['000000', '000000', '000000', '000000', '000000', '111110', '110000', '111100', '110000', '110110', '111110', '000000', '000000', '000000', '000000', '000000'],
    'F': ['000000', '000000', '000000', '000000', '000000', '111110', '110000', '111100', '110000', '110000', '111000', '000000', '000000', '000000', '000000', '000000'],
    'G': ['000000', '000000', '000000', '000000', '000000', '011100', '110110', '110000', '111110', '110110', '011110', '000000', '000000', '000000', '000000', '000000'],
    'H': ['000000', '000000', '000000', '000000', '000000', '110111', '110110', '111110', '110110', '110110', '110111', '000000', '000000', '000000', '000000', '000000'],
    'I': ['000000', '000000', '000000', '000000', '000000', '111100', '011000', '011000', '011000', '011000', '111100', '000000', '000000', '000000', '000000', '000000'],
    'J': ['000000', '000000', '000000', '000000', '000000', '011110', '001100', '001100', '101100', '101100', '111000', '000000', '000000', '000000', '000000', '000000'],
    'K': ['000000', '000000', '000000', '000000', '000000', '110110', '110100', '111000', '111100', '110110', '111011', '000000', '000000', '000000', '000000', '000000'],
    'L': ['000000', '000000', '000000', '000000', '000000', '111000', '110000', '110000', '110000', '110110', '111110', '000000', '000000', '000000', '000000', '000000'],
    'M': ['000000', '000000', '000000', '000000', '000000', '100010', '110110', '110110', '111110', '101010', '101010', '000000', '000000', '000000', '000000', '000000'],
    'N': ['000000', '000000', '000000', '000000', '000000', '110111', '111010', '111010', '110110', '110110', '110010', '000000', '000000', '000000', '000000', '000000'],
    'O': ['000000', '000000', '000000', '000000', '000000', '011100', '110110', '110110', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    'P': ['000000', '000000', '000000', '000000', '000000', '111100', '110110', '110110', '111100', '110000', '111000', '000000', '000000', '000000', '000000', '000000'],
    'Q': ['000000', '000000', '000000', '000000', '000000', '011100', '110110', '110110', '110110', '110110', '011100', '000110', '000000', '000000', '000000', '000000'],
    'R': ['000000', '000000', '000000', '000000', '000000', '111100', '110110', '110110', '111100', '110110', '111011', '000000', '000000', '000000', '000000', '000000'],
    'S': ['000000', '000000', '000000', '000000', '000000', '011110', '110010', '111100', '001110', '100110', '111100', '000000', '000000', '000000', '000000', '000000'],
    'T': ['000000', '000000', '000000', '000000', '000000', '111110', '011010', '011000', '011000', '011000', '111100', '000000', '000000', '000000', '000000', '000000'],
    'U': ['000000', '000000', '000000', '000000', '000000', '110111', '110110', '110110', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    'V': ['000000', '000000', '000000', '000000', '000000', '110111', '110110', '010100', '011100', '011100', '001000', '000000', '000000', '000000', '000000', '000000'],
    'W': ['000000', '000000', '000000', '000000', '000000', '101011', '101010', '101010', '111110', '011100', '010100', '000000', '000000', '000000', '000000', '000000'],
    'X': ['000000', '000000', '000000', '000000', '000000', '110011', '011110', '001100', '001100', '011110', '110011', '000000', '000000', '000000', '000000', '000000'],
    'Y': ['000000', '000000', '000000', '000000', '000000', '110011', '110011', '011110', '001100', '001100', '011110', '000000', '000000', '000000', '000000', '000000'],
    'Z': ['000000', '000000', '000000', '000000', '000000', '111110', '110110', '001100', '011000', '110110', '111110', '000000', '000000', '000000', '000000', '000000'],
    '[': ['000000', '000000', '000000', '000000', '011100', '011000', '011000', '011000', '011000', '011000', '011000', '011100', '000000', '000000', '000000', '000000'],
    '\\': ['000000', '000000', '000000', '000000', '100000', '100000', '010000', '010000', '001000', '001000', '000100', '000100', '000000', '000000', '000000', '000000'],
    ']': ['000000', '000000', '000000', '000000', '011100', '001100', '001100', '001100', '001100', '001100', '001100', '011100', '000000', '000000', '000000', '000000'],
    '^': ['000000', '000000', '000000', '000000', '001000', '011100', '110110', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '_': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '111111', '000000', '000000', '000000'],
    '`': ['000000', '000000', '000000', '000000', '011000', '001000', '000100', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    'a': ['000000', '000000', '000000', '000000', '000000', '000000', '011100', '110110', '011110', '110110', '111111', '000000', '000000', '000000', '000000', '000000'],
    'b': ['000000', '000000', '000000', '000000', '110000', '110000', '111100', '110110', '110110', '110110', '111100', '000000', '000000', '000000', '000000', '000000'],
    'c': ['000000', '000000', '000000', '000000', '000000', '000000', '011100', '110110', '110000', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    'd': ['000000', '000000', '000000', '000000', '001110', '000110', '011110', '110110', '110110', '110110', '011111', '000000', '000000', '000000', '000000', '000000'],
    'e': ['000000', '000000', '000000', '000000', '000000', '000000', '011100', '110110', '111110', '110000', '011110', '000000', '000000', '000000', '000000', '000000'],
    'f': ['000000', '000000', '000000', '000000', '001110', '011000', '111110', '011000', '011000', '011000', '111110', '000000', '000000', '000000', '000000', '000000'],
    'g': ['000000', '000000', '000000', '000000', '000000', '000000', '011011', '110110', '110110', '110110', '011110', '000110', '111100', '000000', '000000', '000000'],
    'h': ['000000', '000000', '000000', '000000', '110000', '110000', '111100', '110110', '110110', '110110', '110110', '000000', '000000', '000000', '000000', '000000'],
    'i': ['000000', '000000', '000000', '000000', '001100', '000000', '111100', '001100', '001100', '001100', '111111', '000000', '000000', '000000', '000000', '000000'],
    'j': ['000000', '000000', '000000', '000000', '001100', '000000', '111100', '001100', '001100', '001100', '001100', '001100', '111000', '000000', '000000', '000000'],
    'k': ['000000', '000000', '000000', '000000', '110000', '110000', '110110', '111100', '111000', '111100', '110111', '000000', '000000', '000000', '000000', '000000'],
    'l': ['000000', '000000', '000000', '000000', '111100', '001100', '001100', '001100', '001100', '001100', '111111', '000000', '000000', '000000', '000000', '000000'],
    'm': ['000000', '000000', '000000', '000000', '000000', '000000', '111100', '111110', '101010', '101010', '101010', '000000', '000000', '000000', '000000', '000000'],
    'n': ['000000', '000000', '000000', '000000', '000000', '000000', '101100', '110110', '110110', '110110', '110110', '000000', '000000', '000000', '000000', '000000'],
    'o': ['000000', '000000', '000000', '000000', '000000', '000000', '011100', '110110', '110110', '110110', '011100', '000000', '000000', '000000', '000000', '000000'],
    'p': ['000000', '000000', '000000', '000000', '000000', '000000', '111100', '110110', '110110', '110110', '111100', '110000', '111000', '000000', '000000', '000000'],
    'q': ['000000', '000000', '000000', '000000', '000000', '000000', '011011', '110110', '110110', '110110', '011110', '000110', '001111', '000000', '000000', '000000'],
    'r': ['000000', '000000', '000000', '000000', '000000', '000000', '110111', '011101', '011000', '011000', '111100', '000000', '000000', '000000', '000000', '000000'],
    's': ['000000', '000000', '000000', '000000', '000000', '000000', '011110', '111000', '011110', '000111', '111110', '000000', '000000', '000000', '000000', '000000'],
    't': ['000000', '000000', '000000', '000000', '011000', '011000', '111110', '011000', '011000', '011011', '001110', '000000', '000000', '000000', '000000', '000000'],
    'u': ['000000', '000000', '000000', '000000', '000000', '000000', '110110', '110110', '110110', '110110', '011111', '000000', '000000', '000000', '000000', '000000'],
    'v': ['000000', '000000', '000000', '000000', '000000', '000000', '110110', '110110', '011100', '011100', '001000', '000000', '000000', '000000', '000000', '000000'],
    'w': ['000000', '000000', '000000', '000000', '000000', '000000', '101011', '101010', '111110', '011110', '010100', '000000', '000000', '000000', '000000', '000000'],
    'x': ['000000', '000000', '000000', '000000', '000000', '000000', '111011', '011110', '001100', '011110', '110111', '000000', '000000', '000000', '000000', '000000'],
    'y': ['000000', '000000', '000000', '000000', '000000', '000000', '110111', '110110', '110110', '010100', '011100', '011000', '110000', '000000', '000000', '000000'],
    'z': ['000000', '000000', '000000', '000000', '000000', '000000', '111110', '101100', '011000', '110110', '111110', '000000', '000000', '000000', '000000', '000000'],
    '{': ['000000', '000000', '000000', '000000', '000110', '001100', '001100', '011000', '001100', '001100', '001100', '000110', '000000', '000000', '000000', '000000'],
    '|': ['000000', '000000', '000000', '000000', '000000', '001000', '001000', '001000', '001000', '001000', '001000', '001000', '000000', '000000', '000000', '000000'],
    '}': ['000000', '000000', '000000', '000000', '110000', '011000', '011000', '001100', '011000', '011000', '011000', '110000', '000000', '000000', '000000', '000000'],
    '~': ['000000', '000000', '000000', '000000', '000000', '000000', '011010', '101100', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
}

FONT_B = {
    ' ': ['000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000', '000000'],
    '!': ['000000', '000000', '000000', '000000', '000000', '000110', '000110', '001100', '001100', '000000', '011000', '000000', '000000', '000000', '000000', '000000'],
    '"': ['0000000', '0000000', '0000000', '0000000', '0000000', '0001010', '0001010', '0010100', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '#': ['00000000', '00000000', '00000000', '00000000', '00010100', '00010100', '00111110', '00101000', '00101000', '01111100', '01010000', '01010000', '00000000', '00000000', '00000000', '00000000'],
    '$': ['00000000', '00000000', '00000000', '00000100', '00011110', '00110010', '00111100', '00111100', '00001100', '01101100', '11110000', '00100000', '00000000', '00000000', '00000000', '00000000'],
    '%': ['00000000', '00000000', '00000000', '00000000', '00111000', '00101010', '00111100', '00010000', '00111100', '01010100', '00111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '&': ['0000000', '0000000', '0000000', '0000000', '0000000', '0001110', '0011000', '0011000', '0111110', '0101100', '1111100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    "'": ['0000000', '0000000', '0000000', '0000000', '0000110', '0000100', '0001000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '(': ['0000000', '0000000', '0000000', '0000000', '0000010', '0000100', '0001100', '0011000', '0011000', '0011000', '0010000', '0001000', '0000000', '0000000', '0000000', '0000000'],
    ')': ['0000000', '0000000', '0000000', '0000000', '0001000', '0000100', '0000110', '0001100', '0001100', '0001100', '0010000', '0100000', '0000000', '0000000', '0000000', '0000000'],
    '*': ['0000000', '0000000', '0000000', '0000000', '0000100', '0011110', '0001100', '0100100', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '+': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000100', '0000100', '0111110', '0001000', '0001000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    ',': ['00000', '00000', '00000', '00000', '00000', '00000', '00000', '00000', '00000', '00000', '00110', '00100', '01000', '00000', '00000', '00000'],
    '-': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0111110', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '.': ['0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0110', '0000', '0000', '0000', '0000', '0000'],
    '/': ['00000000', '00000000', '00000000', '00000000', '00000010', '00000010', '00000100', '00001000', '00010000', '00010000', '01000000', '01000000', '00000000', '00000000', '00000000', '00000000'],
    '0': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00110110', '01101100', '01101100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '1': ['0000000', '0000000', '0000000', '0000000', '0000110', '0011110', '0000110', '0001100', '0001100', '0001100', '1111110', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '2': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00000110', '00011000', '00110000', '01101100', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '3': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00000110', '00111000', '00001100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '4': ['00000000', '00000000', '00000000', '00000000', '00000110', '00001110', '00010110', '01101100', '01111110', '00001100', '00011000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '5': ['00000000', '00000000', '00000000', '00000000', '00111110', '00110000', '00111100', '01101100', '00001100', '01001100', '11110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '6': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00110000', '01111000', '01101100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '7': ['00000000', '00000000', '00000000', '00000000', '00111110', '00110110', '00000110', '00011000', '00011000', '00110000', '01100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '8': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00110110', '00111000', '01101100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '9': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '00110110', '00111100', '00001100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    ':': ['00000', '00000', '00000', '00000', '00000', '00000', '00000', '00110', '00000', '00000', '01100', '00000', '00000', '00000', '00000', '00000'],
    ';': ['00000', '00000', '00000', '00000', '00000', '00000', '00000', '00110', '00000', '00000', '01100', '01000', '10000', '00000', '00000', '00000'],
    '<': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000110', '0001100', '0110000', '0011000', '0001100', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '=': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0000000', '0111100', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '>': ['0000000', '0000000', '0000000', '0000000', '0000000', '0001100', '0000110', '0000110', '0001100', '0011000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    '?': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011100', '00100110', '00011000', '00110000', '00000000', '01100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '@': ['00000000', '00000000', '00000000', '00000000', '00011100', '00110010', '00100110', '01010100', '01010100', '01001110', '11000000', '01110000', '00000000', '00000000', '00000000', '00000000'],
    'A': ['0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0001110', '0010100', '0111110', '0110110', '1101110', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'B': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111100', '00110110', '01111000', '01101100', '01101100', '11110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'C': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011110', '00110110', '01100000', '01100000', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'D': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111100', '00110110', '01101100', '01101100', '01101100', '11110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'E': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '00110000', '01111000', '01100000', '01101100', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'F': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '00110000', '01111000', '01100000', '01100000', '11100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'G': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '01100000', '01111100', '01101100', '01111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'H': ['000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '001101100', '011111000', '011011000', '011011000', '110111000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'I': ['0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0001100', '0011000', '0011000', '0011000', '1111000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'J': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011110', '00001100', '00011000', '01011000', '01011000', '11100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'K': ['00000000', '00000000', '00000000', '00000000', '00000000', '00110110', '00110100', '01110000', '01111000', '01101100', '11101100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'L': ['0000000', '0000000', '0000000', '0000000', '0000000', '0011100', '0011000', '0110000', '0110000', '0110110', '1111100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'M': ['00000000', '00000000', '00000000', '00000000', '00000000', '00100010', '00110110', '01101100', '01111100', '01010100', '10101000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'N': ['000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '001110100', '011101000', '011011000', '011011000', '110010000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'O': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '01101100', '01101100', '01101100', '01110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'P': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111100', '00110110', '01101100', '01111000', '01100000', '11100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'Q': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011100', '00110110', '01101100', '01101100', '01101100', '01110000', '00011000', '00000000', '00000000', '00000000', '00000000'],
    'R': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111100', '00110110', '01101100', '01111000', '01101100', '11101100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'S': ['00000000', '00000000', '00000000', '00000000', '00000000', '00011110', '00110010', '01111000', '00011100', '01001100', '11110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'T': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '00011010', '00110000', '00110000', '00110000', '11110000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'U': ['000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '001101100', '011011000', '011011000', '011011000', '011100000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'V': ['000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '001101100', '001010000', '001110000', '001110000', '001000000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'W': ['000000000', '000000000', '000000000', '000000000', '000000000', '001010110', '001010100', '010101000', '011111000', '001110000', '010100000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'X': ['000000000', '000000000', '000000000', '000000000', '000000000', '001100110', '000111100', '000110000', '000110000', '001111000', '110011000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'Y': ['000000000', '000000000', '000000000', '000000000', '000000000', '001100110', '001100110', '001111000', '000110000', '000110000', '011110000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'Z': ['00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '00110110', '00011000', '00110000', '01101100', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '[': ['0000000', '0000000', '0000000', '0000000', '0001110', '0001100', '0001100', '0011000', '0011000', '0011000', '0110000', '0111000', '0000000', '0000000', '0000000', '0000000'],
    '\\': ['00000', '00000', '00000', '00000', '00100', '00100', '00010', '00100', '00010', '00010', '00010', '00010', '00000', '00000', '00000', '00000'],
    ']': ['0000000', '0000000', '0000000', '0000000', '0001110', '0000110', '0000110', '0001100', '0001100', '0001100', '0011000', '0111000', '0000000', '0000000', '0000000', '0000000'],
    '^': ['00000000', '00000000', '00000000', '00000000', '00001000', '00011100', '00110110', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '_': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '1111110', '0000000', '0000000', '0000000'],
    '`': ['0000000', '0000000', '0000000', '0000000', '0001100', '0000100', '0000010', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'a': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0001110', '0110110', '0011110', '0110110', '1111110', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'b': ['0000000', '0000000', '0000000', '0000000', '0011000', '0011000', '0011110', '0110110', '0110110', '0110110', '1111000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'c': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0001110', '0110110', '0110000', '0110110', '0111000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'd': ['00000000', '00000000', '00000000', '00000000', '00001110', '00000110', '00011110', '01101100', '01101100', '01101100', '01111100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'e': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0001110', '0110110', '0111110', '0110000', '0111100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'f': ['00000000', '00000000', '00000000', '00000000', '00001110', '00011000', '00111110', '00110000', '00110000', '00110000', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'g': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '000110110', '011011000', '011011000', '011011000', '011110000', '000110000', '111100000', '000000000', '000000000', '000000000'],
    'h': ['0000000', '0000000', '0000000', '0000000', '0011000', '0011000', '0011110', '0110110', '0110110', '0110110', '1101100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'i': ['0000000', '0000000', '0000000', '0000000', '0000110', '0000000', '0011110', '0001100', '0001100', '0001100', '1111110', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'j': ['0000000', '0000000', '0000000', '0000000', '0000110', '0000000', '0011110', '0001100', '0001100', '0001100', '0011000', '0011000', '1110000', '0000000', '0000000', '0000000'],
    'k': ['00000000', '00000000', '00000000', '00000000', '00110000', '00110000', '00110110', '01111000', '01110000', '01111000', '11011100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'l': ['0000000', '0000000', '0000000', '0000000', '0011110', '0000110', '0000110', '0001100', '0001100', '0001100', '1111110', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'm': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0111110', '0101010', '0101010', '1010100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'n': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0010110', '0110110', '0110110', '0110110', '1101100', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'o': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0001110', '0110110', '0110110', '0110110', '0111000', '0000000', '0000000', '0000000', '0000000', '0000000'],
    'p': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0110110', '0110110', '0110110', '1111000', '1100000', '1110000', '0000000', '0000000', '0000000'],
    'q': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '000110110', '011011000', '011011000', '011011000', '011110000', '000110000', '001111000', '000000000', '000000000', '000000000'],
    'r': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '001110100', '001100000', '001100000', '111100000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    's': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00011110', '01110000', '00111100', '00001110', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    't': ['00000000', '00000000', '00000000', '00000000', '00011000', '00011000', '00111110', '00110000', '00110000', '00110110', '00111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'u': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00110110', '01101100', '01101100', '01101100', '01111100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'v': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00110110', '01101100', '00111000', '00111000', '00100000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    'w': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '001010110', '010101000', '011111000', '001111000', '010100000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'x': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '001110110', '001111000', '000110000', '001111000', '110111000', '000000000', '000000000', '000000000', '000000000', '000000000'],
    'y': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '001101110', '011011000', '011011000', '001010000', '011100000', '011000000', '110000000', '000000000', '000000000', '000000000'],
    'z': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '01011000', '00110000', '01101100', '11111000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '{': ['00000000', '00000000', '00000000', '00000000', '00000110', '00001100', '00001100', '00110000', '00011000', '00011000', '00110000', '00011000', '00000000', '00000000', '00000000', '00000000'],
    '|': ['000000', '000000', '000000', '000000', '000000', '000010', '000010', '000100', '000100', '000100', '001000', '001000', '000000', '000000', '000000', '000000'],
    '}': ['000000', '000000', '000000', '000000', '001100', '000110', '000110', '000110', '001100', '001100', '011000', '110000', '000000', '000000', '000000', '000000'],
    '~': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00011010', '01011000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000'],
}

FONT_C = {
    ' ': ['000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000'],
    '!': ['000', '000', '000', '000', '010', '010', '010', '010', '010', '010', '010', '010', '010', '000', '000', '000'],
    '"': ['00000', '00000', '00000', '00000', '01010', '01010', '01010', '00000', '00000', '00000', '00000', '00000', '00000', '00000', '00000', '00000'],
    '#': ['00000000', '00000000', '00000000', '00000000', '00010100', '00010100', '00010100', '01111100', '00101000', '01111100', '00101000', '00100000', '00000000', '00000000', '00000000', '00000000'],
    '$': ['00000000', '00000000', '00000000', '00010000', '00111100', '01010110', '01010000', '01110000', '00111100', '00010110', '00010010', '01010110', '01111100', '00010000', '00000000', '00000000'],
    '%': ['0000000000', '0000000000', '0000000000', '0000000000', '0011000100', '0100101000', '0100101000', '0011010000', '0000010000', '0000101100', '0001001010', '0001001010', '0010001100', '0000000000', '0000000000', '0000000000'],
    '&': ['000000000', '000000000', '000000000', '000000000', '001111000', '010000000', '010000000', '010000100', '001111110', '011000100', '010000100', '010000100', '001111100', '000000000', '000000000', '000000000'],
    "'": ['000', '000', '000', '000', '010', '010', '010', '000', '000', '000', '000', '000', '000', '000', '000', '000'],
    '(': ['0000', '0000', '0000', '0010', '0010', '0100', '0100', '0100', '0100', '0100', '0100', '0100', '0010', '0010', '0000', '0000'],
    ')': ['0000', '0000', '0000', '0000', '0100', '0100', '0010', '0010', '0010', '0010', '0010', '0100', '0100', '0000', '0000', '0000'],
    '*': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0001000', '0001000', '0111100', '0010100', '0100000', '0000000', '0000000', '0000000', '0000000'],
    '+': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00001000', '00001000', '00001000', '00111110', '00001000', '00001000', '00000000', '00000000', '00000000', '00000000'],
    ',': ['000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '010', '100', '100', '000'],
    '-': ['0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0110', '0000', '0000', '0000', '0000', '0000', '0000'],
    '.': ['000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '000', '010', '010', '000', '000', '000'],
    '/': ['0000', '0000', '0000', '0000', '0001', '0000', '0010', '0010', '0000', '0100', '0100', '0000', '1000', '0000', '0000', '0000'],
    '0': ['00000000', '00000000', '00000000', '00000000', '00111100', '01100100', '01000010', '01000010', '01000010', '01000010', '01000010', '01100100', '00111100', '00000000', '00000000', '00000000'],
    '1': ['00000000', '00000000', '00000000', '00000000', '00011000', '01111000', '00001000', '00001000', '00001000', '00001000', '00001000', '00001000', '00001000', '00000000', '00000000', '00000000'],
    '2': ['00000000', '00000000', '00000000', '00000000', '00111100', '01100110', '01000010', '00000110', '00000100', '00001000', '00010000', '00100000', '01111110', '00000000', '00000000', '00000000'],
    '3': ['00000000', '00000000', '00000000', '00000000', '00111100', '01100110', '01000010', '00000100', '00001100', '00000110', '01000010', '01000110', '00111100', '00000000', '00000000', '00000000'],
    '4': ['00000000', '00000000', '00000000', '00000000', '00001100', '00001100', '00010100', '00110100', '00100100', '01000100', '11111110', '00000100', '00000100', '00000000', '00000000', '00000000'],
    '5': ['00000000', '00000000', '00000000', '00000000', '00111110', '01000000', '01000000', '01111100', '01100110', '00000010', '01000010', '01000110', '00111100', '00000000', '00000000', '00000000'],
    '6': ['00000000', '00000000', '00000000', '00000000', '00011100', '00100110', '01000000', '01011100', '01100110', '01000010', '01000010', '01100110', '00111100', '00000000', '00000000', '00000000'],
    '7': ['00000000', '00000000', '00000000', '00000000', '01111110', '00000100', '00000100', '00001000', '00001000', '00010000', '00010000', '00100000', '00100000', '00000000', '00000000', '00000000'],
    '8': ['00000000', '00000000', '00000000', '00000000', '00111100', '01000110', '01000010', '01000110', '00111100', '01000110', '01000010', '01000110', '00111100', '00000000', '00000000', '00000000'],
    '9': ['00000000', '00000000', '00000000', '00000000', '00111100', '01100110', '01000010', '01000010', '01100110', '00111010', '01000010', '01000100', '00111000', '00000000', '00000000', '00000000'],
    ':': ['000', '000', '000', '000', '000', '000', '010', '010', '000', '000', '000', '010', '010', '000', '000', '000'],
    ';': ['000', '000', '000', '000', '000', '000', '010', '010', '000', '000', '000', '000', '010', '100', '100', '000'],
    '<': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000110', '0011000', '0100000', '0011000', '0000110', '0000000', '0000000', '0000000', '0000000'],
    '=': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '01111100', '00000000', '00000000', '01111100', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '>': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0110000', '0001100', '0000010', '0001100', '0110000', '0000000', '0000000', '0000000', '0000000'],
    '?': ['0000000', '0000000', '0000000', '0000000', '0011100', '0100010', '0100010', '0000110', '0000100', '0001000', '0000000', '0001000', '0001000', '0000000', '0000000', '0000000'],
    '@': ['000000000000', '000000000000', '000000000000', '000000000000', '000011111000', '000100001100', '001011110110', '010110110010', '010100010010', '010100110010', '010100110100', '011011011000', '001100001000', '000111110000', '000000000000', '000000000000'],
    'A': ['000000000', '000000000', '000000000', '000000000', '000110000', '000111000', '000101000', '001001000', '001001100', '001111100', '010000100', '010000110', '010000010', '000000000', '000000000', '000000000'],
    'B': ['00000000', '00000000', '00000000', '00000000', '01111100', '01000110', '01000010', '01000110', '01111100', '01000110', '01000010', '01000110', '01111100', '00000000', '00000000', '00000000'],
    'C': ['000000000', '000000000', '000000000', '000000000', '000111100', '001000010', '010000011', '010000000', '010000000', '010000000', '010000010', '001000010', '000111100', '000000000', '000000000', '000000000'],
    'D': ['000000000', '000000000', '000000000', '000000000', '011111000', '010000100', '010000110', '010000010', '010000010', '010000010', '010000110', '010000100', '011111000', '000000000', '000000000', '000000000'],
    'E': ['0000000', '0000000', '0000000', '0000000', '0111111', '0100000', '0100000', '0100000', '0111110', '0100000', '0100000', '0100000', '0111111', '0000000', '0000000', '0000000'],
    'F': ['0000000', '0000000', '0000000', '0000000', '0111111', '0100000', '0100000', '0100000', '0111110', '0100000', '0100000', '0100000', '0100000', '0000000', '0000000', '0000000'],
    'G': ['0000000000', '0000000000', '0000000000', '0000000000', '0001111100', '0010000110', '0110000010', '0100000000', '0100001110', '0100000010', '0110000110', '0010000110', '0001111010', '0000000000', '0000000000', '0000000000'],
    'H': ['000000000', '000000000', '000000000', '000000000', '010000010', '010000010', '010000010', '010000010', '011111110', '010000010', '010000010', '010000010', '010000010', '000000000', '000000000', '000000000'],
    'I': ['000', '000', '000', '000', '010', '010', '010', '010', '010', '010', '010', '010', '010', '000', '000', '000'],
    'J': ['0000000', '0000000', '0000000', '0000000', '0000010', '0000010', '0000010', '0000010', '0000010', '0000010', '0100010', '0100110', '0011100', '0000000', '0000000', '0000000'],
    'K': ['00000000', '00000000', '00000000', '00000000', '01000010', '01000100', '01001000', '01011000', '01110000', '01111000', '01001000', '01000100', '01000010', '00000000', '00000000', '00000000'],
    'L': ['0000000', '0000000', '0000000', '0000000', '0100000', '0100000', '0100000', '0100000', '0100000', '0100000', '0100000', '0100000', '0111111', '0000000', '0000000', '0000000'],
    'M': ['00000000000', '00000000000', '00000000000', '00000000000', '01100000110', '01100000110', '01110001110', '01010001010', '01010001010', '01011010010', '01001010010', '01001110010', '01000100010', '00000000000', '00000000000', '00000000000'],
    'N': ['000000000', '000000000', '000000000', '000000000', '011000010', '011000010', '010100010', '010100010', '010010010', '010011010', '010001010', '010001110', '010000110', '000000000', '000000000', '000000000'],
    'O': ['0000000000', '0000000000', '0000000000', '0000000000', '0001111000', '0010000100', '0100000110', '0100000010', '0100000010', '0100000010', '0100000110', '0010000100', '0001111000', '0000000000', '0000000000', '0000000000'],
    'P': ['00000000', '00000000', '00000000', '00000000', '01111100', '01000110', '01000010', '01000110', '01111100', '01000000', '01000000', '01000000', '01000000', '00000000', '00000000', '00000000'],
    'Q': ['0000000000', '0000000000', '0000000000', '0000000000', '0001111000', '0010000100', '0100000110', '0100000010', '0100000010', '0100000010', '0100000110', '0010000100', '0001111100', '0000000000', '0000000000', '0000000000'],
    'R': ['00000000', '00000000', '00000000', '00000000', '01111100', '01000110', '01000010', '01000110', '01111100', '01000100', '01000110', '01000010', '01000010', '00000000', '00000000', '00000000'],
    'S': ['00000000', '00000000', '00000000', '00000000', '00111100', '01000110', '01000000', '01100000', '00111100', '00000110', '00000010', '01000110', '00111100', '00000000', '00000000', '00000000'],
    'T': ['000000000', '000000000', '000000000', '000000000', '011111110', '000010000', '000010000', '000010000', '000010000', '000010000', '000010000', '000010000', '000010000', '000000000', '000000000', '000000000'],
    'U': ['000000000', '000000000', '000000000', '000000000', '010000010', '010000010', '010000010', '010000010', '010000010', '010000010', '010000010', '011000110', '001111100', '000000000', '000000000', '000000000'],
    'V': ['000000000', '000000000', '000000000', '000000000', '010000010', '010000010', '010000100', '001000100', '001000100', '001001000', '000101000', '000111000', '000110000', '000000000', '000000000', '000000000'],
    'W': ['0000000000000', '0000000000000', '0000000000000', '0000000000000', '1100011000010', '0100011000010', '0100010100110', '0100010100100', '0010100100100', '0010100100100', '0010100011000', '0011100011000', '0001000011000', '0000000000000', '0000000000000', '0000000000000'],
    'X': ['000000000', '000000000', '000000000', '000000000', '010000110', '001000100', '001001000', '000110000', '000110000', '000111000', '001001000', '011000100', '010000110', '000000000', '000000000', '000000000'],
    'Y': ['000000000', '000000000', '000000000', '000000000', '010000010', '011000100', '001000100', '000101000', '000111000', '000010000', '000010000', '000010000', '000010000', '000000000', '000000000', '000000000'],
    'Z': ['00000000', '00000000', '00000000', '00000000', '01111110', '00000010', '00000100', '00001100', '00001000', '00010000', '00100000', '01100000', '01111110', '00000000', '00000000', '00000000'],
    '[': ['0000', '0000', '0000', '0110', '0100', '0100', '0100', '0100', '0100', '0100', '0100', '0100', '0100', '0110', '0000', '0000'],
    '\\': ['0000', '0000', '0000', '0000', '1000', '1000', '0100', '0100', '0100', '0010', '0010', '0000', '0001', '0000', '0000', '0000'],
    ']': ['0000', '0000', '0000', '0110', '0010', '0010', '0010', '0010', '0010', '0010', '0010', '0010', '0010', '0110', '0000', '0000'],
    '^': ['00000000', '00000000', '00000000', '00000000', '00000000', '00010000', '00001000', '00100000', '00100100', '01000100', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000'],
    '_': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0111110', '0000000', '0000000'],
    '`': ['0000', '0000', '0000', '0000', '0000', '0100', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000', '0000'],
    'a': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011100', '0100010', '0000010', '0011110', '0100010', '0100110', '0111110', '0000000', '0000000', '0000000'],
    'b': ['00000000', '00000000', '00000000', '00000000', '01000000', '01000000', '01011100', '01100110', '01000010', '01000010', '01000010', '01100100', '01111100', '00000000', '00000000', '00000000'],
    'c': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011110', '0110011', '0100000', '0100000', '0100000', '0110011', '0011110', '0000000', '0000000', '0000000'],
    'd': ['00000000', '00000000', '00000000', '00000000', '00000010', '00000010', '00111110', '01100110', '01000010', '01000010', '01000010', '01100110', '00111010', '00000000', '00000000', '00000000'],
    'e': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011100', '0110010', '0100001', '0111111', '0100000', '0110010', '0011100', '0000000', '0000000', '0000000'],
    'f': ['0000', '0000', '0000', '0000', '0100', '0100', '1110', '0100', '0100', '0100', '0100', '0100', '0100', '0000', '0000', '0000'],
    'g': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '01100110', '01000010', '01000010', '01000010', '01100110', '00111010', '01000010', '01100110', '00111100'],
    'h': ['00000000', '00000000', '00000000', '00000000', '01000000', '01000000', '01011100', '01100110', '01000010', '01000010', '01000010', '01000010', '01000010', '00000000', '00000000', '00000000'],
    'i': ['000', '000', '000', '000', '010', '000', '010', '010', '010', '010', '010', '010', '010', '000', '000', '000'],
    'j': ['000', '000', '000', '000', '010', '000', '010', '010', '010', '010', '010', '010', '010', '010', '010', '110'],
    'k': ['0000000', '0000000', '0000000', '0000000', '0100000', '0100000', '0100010', '0100100', '0101000', '0111000', '0101100', '0100100', '0100010', '0000000', '0000000', '0000000'],
    'l': ['000', '000', '000', '000', '010', '010', '010', '010', '010', '010', '010', '010', '011', '000', '000', '000'],
    'm': ['00000000000', '00000000000', '00000000000', '00000000000', '00000000000', '00000000000', '01111011100', '01000100010', '01000100010', '01000100010', '01000100010', '01000100010', '01000100010', '00000000000', '00000000000', '00000000000'],
    'n': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '01011100', '01100110', '01000010', '01000010', '01000010', '01000010', '01000010', '00000000', '00000000', '00000000'],
    'o': ['000000000', '000000000', '000000000', '000000000', '000000000', '000000000', '001111000', '011000100', '010000010', '010000010', '010000010', '011000100', '001111000', '000000000', '000000000', '000000000'],
    'p': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '01011100', '01100110', '01000010', '01000010', '01000010', '01100100', '01111100', '01000000', '01000000', '01000000'],
    'q': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00111110', '01100110', '01000010', '01000010', '01000010', '01100110', '00111010', '00000010', '00000010', '00000010'],
    'r': ['00000', '00000', '00000', '00000', '00000', '00000', '01010', '01100', '01000', '01000', '01000', '01000', '01000', '00000', '00000', '00000'],
    's': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0011100', '0100110', '0100000', '0011100', '0000110', '0100010', '0011100', '0000000', '0000000', '0000000'],
    't': ['0000', '0000', '0000', '0000', '0100', '0100', '1110', '0100', '0100', '0100', '0100', '0100', '0110', '0000', '0000', '0000'],
    'u': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '01000010', '01000010', '01000010', '01000010', '01000010', '01000110', '00111010', '00000000', '00000000', '00000000'],
    'v': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '1000010', '0100010', '0100010', '0100100', '0010100', '0011100', '0011000', '0000000', '0000000', '0000000'],
    'w': ['00000000000', '00000000000', '00000000000', '00000000000', '00000000000', '00000000000', '10001100010', '11001100010', '01001100100', '01000010100', '01110010100', '00110011000', '00110011000', '00000000000', '00000000000', '00000000000'],
    'x': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '1100110', '0100100', '0011000', '0011000', '0011000', '0100100', '1100110', '0000000', '0000000', '0000000'],
    'y': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '1000010', '0100010', '0100010', '0100100', '0010100', '0010100', '0011000', '0001000', '0010000', '0110000'],
    'z': ['0000000', '0000000', '0000000', '0000000', '0000000', '0000000', '0111110', '0000010', '0000100', '0001000', '0011000', '0010000', '0111110', '0000000', '0000000', '0000000'],
    '{': ['0000', '0000', '0000', '0011', '0010', '0010', '0010', '0010', '0100', '0010', '0010', '0010', '0010', '0011', '0000', '0000'],
    '|': ['000', '000', '000', '010', '010', '010', '010', '010', '010', '010', '010', '010', '010', '010', '010', '010'],
    '}': ['0000', '0000', '0000', '1100', '0100', '0100', '0100', '0100', '0110', '0100', '0100', '0100', '0100', '1100', '0000', '0000'],
    '~': ['00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000', '01110000', '01001100', '00000000', '00000000', '00000000', '00000000', '00000000', '00000000'],
}
