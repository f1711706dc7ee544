#include <gtest/gtest.h>

#include <string>

#include "dualmark/syntax.hpp"

namespace py = dualmark::py;

namespace {

std::string canon(const std::string& src) { return py::render_module(py::parse_module(src)); }

}  // namespace

TEST(Parse, SingleAssignment) {
  const py::Module m = py::parse_module("x = 1\n");
  ASSERT_EQ(m.body.size(), 1u);
  EXPECT_EQ(m.body[0].kind, py::StmtKind::Assign);
  EXPECT_TRUE(m.body[0].exprs[0].is_name("x"));
}

TEST(Parse, EmptySourceIsEmptyModule) {
  EXPECT_TRUE(py::parse_module("").body.empty());
  EXPECT_EQ(canon(""), "");
}

TEST(Parse, ErrorReportsLine) {
  try {
    py::parse_module("def f(:\n");
    FAIL() << "expected ParseError";
  } catch (const py::ParseError& e) {
    EXPECT_EQ(e.line(), 1);
  }
  try {
    py::parse_module("x = 1\ny = (2\n");
    FAIL() << "expected ParseError";
  } catch (const py::ParseError& e) {
    EXPECT_GE(e.line(), 2);
  }
}

TEST(Parse, RejectsBadIndentation) {
  EXPECT_THROW(py::parse_module("if x:\n    a = 1\n  b = 2\n"), py::ParseError);
  EXPECT_THROW(py::parse_module("    x = 1\n"), py::ParseError);
  EXPECT_THROW(py::parse_module("if x:\npass\n"), py::ParseError);
}

TEST(Parse, RejectsInvalidTargets) {
  EXPECT_THROW(py::parse_module("f() = 1\n"), py::ParseError);
  EXPECT_THROW(py::parse_module("1 += 2\n"), py::ParseError);
  EXPECT_THROW(py::parse_module("x = = 1\n"), py::ParseError);
}

TEST(Render, CanonicalSpacing) {
  EXPECT_EQ(canon("x=1"), "x = 1\n");
  EXPECT_EQ(canon("y=a+b*c"), "y = a + b * c\n");
  EXPECT_EQ(canon("if a<b :\n  return x\n"), "if a < b:\n    return x\n");
  EXPECT_EQ(canon("f(a,b=2,*c,**d)"), "f(a, b=2, *c, **d)\n");
}

TEST(Render, MinimalParentheses) {
  EXPECT_EQ(canon("y = (a + b) * c"), "y = (a + b) * c\n");
  EXPECT_EQ(canon("y = a - (b - c)"), "y = a - (b - c)\n");
  EXPECT_EQ(canon("y = (a ** b) ** c"), "y = (a ** b) ** c\n");
  EXPECT_EQ(canon("y = a ** b ** c"), "y = a ** b ** c\n");
  EXPECT_EQ(canon("y = (-a) ** 2"), "y = (-a) ** 2\n");
  EXPECT_EQ(canon("y = not (a == b)"), "y = not (a == b)\n");
  EXPECT_EQ(canon("y = (1).real"), "y = (1).real\n");
  EXPECT_EQ(canon("y = sum(x for x in xs)"), "y = sum(x for x in xs)\n");
  EXPECT_EQ(canon("y = (lambda: 1)()"), "y = (lambda: 1)()\n");
  EXPECT_EQ(canon("t = 1,"), "t = 1,\n");
  EXPECT_EQ(canon("t = ()"), "t = ()\n");
}

TEST(Render, RedundantParenthesesArePreserved) {
  EXPECT_EQ(canon("return(x)\n"), "return (x)\n");
  EXPECT_EQ(canon("y = (a) + (b * c)\n"), "y = (a) + (b * c)\n");
}

TEST(Render, CompoundStatements) {
  const std::string src =
      "import os\n"
      "from . import a as b\n"
      "\n"
      "@decorator(1)\n"
      "class K(Base, metaclass=M):\n"
      "    def m(self, x: int = 1, *args, y, **kw) -> int:\n"
      "        try:\n"
      "            with open(p) as fh, g():\n"
      "                pass\n"
      "        except (ValueError, KeyError) as err:\n"
      "            raise RuntimeError('bad') from err\n"
      "        else:\n"
      "            del x[0], y\n"
      "        finally:\n"
      "            global q\n"
      "        while x:\n"
      "            break\n"
      "        else:\n"
      "            continue\n"
      "        for i, j in pairs:\n"
      "            yield i\n"
      "        if a:\n"
      "            pass\n"
      "        elif b:\n"
      "            pass\n"
      "        else:\n"
      "            assert c, 'msg'\n"
      "        return {k: v for k, v in d.items() if v}\n";
  EXPECT_EQ(canon(src), src);
}

TEST(Render, CommentsAreKept) {
  const std::string src =
      "# header\n"
      "x = 1  # trailing\n"
      "\n"
      "def f():\n"
      "    # inside\n"
      "    return x\n"
      "# tail\n";
  EXPECT_EQ(canon(src), src);
}

TEST(Render, Idempotent) {
  const std::string srcs[] = {
      "a=[ i*2 for i in range( 0,10 ) if i%2 ]\nb={1,2}\nc={'a':1,**d}\n",
      "def g(a,/,b,*,c=lambda y:y+1):\n  return a if b else(c)\n",
      "x=a[1:2,::3]\nz=not a and(b or c)\nw=-x**-y\n",
      "s='a' 'b'\nn=0x1F+1e-3+2j\nf(*a)\nv=(yield)\n",
      "while (n:=next(it)) is not None and n not in seen:\n\tseen.add(n)\n",
  };
  for (const std::string& src : srcs) {
    const std::string once = canon(src);
    EXPECT_EQ(canon(once), once) << src;
    EXPECT_TRUE(py::structurally_equal(py::parse_module(src), py::parse_module(once))) << src;
  }
}

TEST(Render, StyleChangesTextNotStructure) {
  const std::string src = "def f(a, b):\n    if a > b:\n        return a + b\n    return [a, b]\n";
  py::RenderStyle style;
  style.indent = "  ";
  style.operator_pad = "";
  style.comma_pad = "";
  const std::string text = py::render_module(py::parse_module(src), style);
  EXPECT_NE(text, src);
  EXPECT_NE(text.find("return a+b"), std::string::npos);
  EXPECT_TRUE(py::structurally_equal(py::parse_module(text), py::parse_module(src)));
  EXPECT_EQ(canon(text), src);
}

TEST(Dump, IgnoresTrivia) {
  EXPECT_EQ(py::dump(py::parse_module("x = (1)  # c\n")), py::dump(py::parse_module("x=1\n")));
  EXPECT_NE(py::dump(py::parse_module("x = 1\n")), py::dump(py::parse_module("x = 2\n")));
}
