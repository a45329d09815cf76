import re
import sys

"""
Converts a literate demo script to reStructuredText.

    1) Everything that starts with a comment, or sits inside a triple
       quoted block, is reStructuredText and is copied without the "#".
    2) Everything else is code and goes into a "::" block.
"""


def fix_inline_math(text):
    """
    The demos write inline math as $\\alpha/\\beta$, rst wants
    :math:`\\alpha/\\beta`. Closing dollars become backticks first, the
    remaining opening ones become :math:`.
    """
    text = re.sub(r"(\$[^\$]*)\$", r"\1`", text)
    return re.sub(r"\$", r":math:`", text)


def convert(text):
    out = []
    in_commentblock = False
    in_codeblock = False

    for line in fix_inline_math(text).split("\n"):
        if line.startswith('"""'):
            in_commentblock = not in_commentblock
            in_codeblock = False
            out.append(line.replace('"', ""))
            continue

        if in_commentblock:
            out.append(line)
            continue

        if line.startswith("#"):
            in_codeblock = False
            out.append(line[2:].rstrip())
            continue

        if not line.strip() and not in_codeblock:
            out.append("")
            continue

        if not in_codeblock:
            in_codeblock = True
            out.append("\n::\n")
        out.append("  " + line)

    return "\n".join(out)


if __name__ == "__main__":
    with open(sys.argv[1], "r") as f:
        print(convert(f.read()))
