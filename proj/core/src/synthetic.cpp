#include "alphacc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "alphacc/error.hpp"
#include "alphacc/hash.hpp"
#include "alphacc/lexer.hpp"
#include "alphacc/rng.hpp"

namespace alphacc {

namespace {

// A tiny statement tree, enough to render Java and to rewrite loops.
// Placeholders: $name is an identifier, @k is the k-th literal of the step.
struct Node {
  enum class Kind : std::uint8_t { Stmt, Loop, If };
  Kind kind = Kind::Stmt;
  std::string text;          // statement, loop condition or if condition
  std::string init, update;  // loop header parts, may be empty
  bool as_while = false;
  std::vector<Node> body, orelse;
};

using Nodes = std::vector<Node>;

Node S(std::string text) { return {Node::Kind::Stmt, std::move(text), {}, {}, false, {}, {}}; }

Node For(std::string init, std::string cond, std::string update, Nodes body) {
  return {Node::Kind::Loop, std::move(cond), std::move(init), std::move(update), false, std::move(body), {}};
}

Node While(std::string cond, Nodes body) { return {Node::Kind::Loop, std::move(cond), {}, {}, true, std::move(body), {}}; }

Node If(std::string cond, Nodes then, Nodes orelse = {}) {
  return {Node::Kind::If, std::move(cond), {}, {}, false, std::move(then), std::move(orelse)};
}

Node Loop(const char* i, const char* from = "0") {
  return For(std::string("int $") + i + " = " + from, std::string("$") + i + " < $a.length", std::string("$") + i + "++", {});
}

Node Each(const char* i, Nodes body, const char* from = "0") {
  Node n = Loop(i, from);
  n.body = std::move(body);
  return n;
}

struct StepDef {
  const char* name;
  std::vector<std::pair<int, int>> literals;  // inclusive ranges for @0, @1, ...
  Nodes (*primary)();
  Nodes (*alternate)();  // semantically equivalent rewrite, may be null
};

// Every step reads the array $a and leaves its contribution in $v.
const StepDef kSteps[] = {
    {"sum", {},
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v += $a[$i];")})}; },
     [] { return Nodes{S("long $v = 0;"), S("for (int $x : $a) { $v += $x; }")}; }},
    {"max", {},
     [] { return Nodes{S("int $v = $a.length > 0 ? $a[0] : 0;"), Each("i", {If("$a[$i] > $v", {S("$v = $a[$i];")})}, "1")}; },
     [] { return Nodes{S("int $v = $a.length > 0 ? $a[0] : 0;"), Each("i", {S("$v = Math.max($v, $a[$i]);")}, "1")}; }},
    {"min", {},
     [] { return Nodes{S("int $v = $a.length > 0 ? $a[0] : 0;"), Each("i", {If("$a[$i] < $v", {S("$v = $a[$i];")})}, "1")}; },
     [] { return Nodes{S("int $v = $a.length > 0 ? $a[0] : 0;"), Each("i", {S("$v = Math.min($v, $a[$i]);")}, "1")}; }},
    {"count_greater", {{3, 60}},
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("$a[$i] > @0", {S("$v++;")})})}; },
     [] {
       return Nodes{S("int $v = 0;"), For("int $i = $a.length - 1", "$i >= 0", "$i--", {If("@0 < $a[$i]", {S("$v += 1;")})})};
     }},
    {"count_even", {},
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("$a[$i] % 2 == 0", {S("$v++;")})})}; },
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("($a[$i] & 1) == 0", {S("$v++;")})})}; }},
    {"gcd", {{12, 90}, {8, 60}},
     [] {
       return Nodes{S("int $x = $a.length > 0 ? Math.abs($a[0]) : @0;"), S("int $y = $a.length > 1 ? Math.abs($a[1]) : @1;"),
                    While("$y != 0", {S("int $t = $x % $y;"), S("$x = $y;"), S("$y = $t;")}), S("long $v = $x;")};
     },
     [] {
       return Nodes{S("int $x = $a.length > 0 ? Math.abs($a[0]) : @0;"), S("int $y = $a.length > 1 ? Math.abs($a[1]) : @1;"),
                    While("$x > 0 && $y > 0 && $x != $y", {If("$x > $y", {S("$x -= $y;")}, {S("$y -= $x;")})}),
                    S("long $v = $x == 0 ? $y : $x;")};
     }},
    {"bubble_median", {},
     [] {
       return Nodes{S("int[] $c = $a.clone();"),
                    For("int $i = 0", "$i < $c.length", "$i++",
                        {For("int $j = 0", "$j + 1 < $c.length - $i", "$j++",
                             {If("$c[$j] > $c[$j + 1]", {S("int $t = $c[$j];"), S("$c[$j] = $c[$j + 1];"), S("$c[$j + 1] = $t;")})})}),
                    S("long $v = $c.length > 0 ? $c[$c.length / 2] : 0;")};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"),
                    S("long $v = $c.length > 0 ? $c[$c.length / 2] : 0;")};
     }},
    {"insertion_top", {{1, 4}},
     [] {
       return Nodes{S("int[] $c = $a.clone();"),
                    For("int $i = 1", "$i < $c.length", "$i++",
                        {S("int $key = $c[$i];"), S("int $j = $i - 1;"),
                         While("$j >= 0 && $c[$j] > $key", {S("$c[$j + 1] = $c[$j];"), S("$j--;")}), S("$c[$j + 1] = $key;")}),
                    S("long $v = 0;"), For("int $k = $c.length - 1", "$k >= 0 && $k >= $c.length - @0", "$k--", {S("$v += $c[$k];")})};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"), S("long $v = 0;"),
                    For("int $k = $c.length - 1", "$k >= 0 && $k >= $c.length - @0", "$k--", {S("$v += $c[$k];")})};
     }},
    {"selection_kth", {{0, 3}},
     [] {
       return Nodes{S("int[] $c = $a.clone();"),
                    For("int $i = 0", "$i < $c.length", "$i++",
                        {S("int $m = $i;"), For("int $j = $i + 1", "$j < $c.length", "$j++", {If("$c[$j] < $c[$m]", {S("$m = $j;")})}),
                         S("int $t = $c[$m];"), S("$c[$m] = $c[$i];"), S("$c[$i] = $t;")}),
                    S("long $v = $c.length > @0 ? $c[@0] : -1;")};
     },
     [] {
       return Nodes{S("int[] $c = java.util.Arrays.copyOf($a, $a.length);"), S("java.util.Arrays.sort($c);"),
                    S("long $v = $c.length > @0 ? $c[@0] : -1;")};
     }},
    {"linear_search", {{1, 40}},
     [] { return Nodes{S("int $v = -1;"), Each("i", {If("$a[$i] == @0", {S("$v = $i;"), S("break;")})})}; },
     [] {
       return Nodes{S("int $i = 0;"), While("$i < $a.length && $a[$i] != @0", {S("$i++;")}),
                    S("int $v = $i < $a.length ? $i : -1;")};
     }},
    {"binary_search", {{1, 40}},
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"), S("int $lo = 0;"), S("int $hi = $c.length - 1;"),
                    S("int $v = -1;"),
                    While("$lo <= $hi", {S("int $m = ($lo + $hi) >>> 1;"),
                                         If("$c[$m] == @0", {S("$v = $m;"), S("break;")},
                                            {If("$c[$m] < @0", {S("$lo = $m + 1;")}, {S("$hi = $m - 1;")})})})};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"), S("int $v = -1;"),
                    For("int $m = 0", "$m < $c.length && $v < 0", "$m++", {If("$c[$m] == @0", {S("$v = $m;")})})};
     }},
    {"reverse_weighted", {},
     [] {
       return Nodes{S("long $v = 0;"), S("int $w = 1;"),
                    For("int $i = $a.length - 1", "$i >= 0", "$i--", {S("$v += (long) $a[$i] * $w;"), S("$w++;")})};
     },
     [] {
       return Nodes{S("int[] $c = new int[$a.length];"), Each("i", {S("$c[$a.length - 1 - $i] = $a[$i];")}), S("long $v = 0;"),
                    For("int $j = 0", "$j < $c.length", "$j++", {S("$v += (long) $c[$j] * ($j + 1);")})};
     }},
    {"prefix_max", {},
     [] {
       return Nodes{S("long $cur = 0;"), S("long $v = 0;"), Each("i", {S("$cur += $a[$i];"), If("$cur > $v", {S("$v = $cur;")})})};
     },
     [] {
       return Nodes{S("long[] $pre = new long[$a.length + 1];"), Each("i", {S("$pre[$i + 1] = $pre[$i] + $a[$i];")}),
                    S("long $v = 0;"), For("int $j = 1", "$j < $pre.length", "$j++", {S("$v = Math.max($v, $pre[$j]);")})};
     }},
    {"factorial", {{4, 9}},
     [] {
       return Nodes{S("int $k = $a.length % @0;"), S("long $v = 1;"), For("int $i = 2", "$i <= $k", "$i++", {S("$v *= $i;")})};
     },
     [] {
       return Nodes{S("int $k = $a.length % @0;"), S("long $v = 1;"), For("int $i = $k", "$i > 1", "$i--", {S("$v = $v * $i;")})};
     }},
    {"fibonacci", {{3, 12}},
     [] {
       return Nodes{S("int $k = @0 + $a.length % 5;"), S("long $x = 0;"), S("long $y = 1;"),
                    For("int $i = 0", "$i < $k", "$i++", {S("long $t = $x + $y;"), S("$x = $y;"), S("$y = $t;")}),
                    S("long $v = $x;")};
     },
     [] {
       return Nodes{S("int $k = @0 + $a.length % 5;"), S("long[] $f = new long[$k + 2];"), S("$f[1] = 1;"),
                    For("int $i = 2", "$i <= $k", "$i++", {S("$f[$i] = $f[$i - 1] + $f[$i - 2];")}), S("long $v = $f[$k];")};
     }},
    {"power", {{2, 9}},
     [] {
       return Nodes{S("long $b = $a.length + 1;"), S("long $v = 1;"), For("int $i = 0", "$i < @0", "$i++", {S("$v *= $b;")})};
     },
     [] {
       return Nodes{S("long $b = $a.length + 1;"), S("long $v = 1;"), S("int $e = @0;"),
                    While("$e > 0", {If("($e & 1) == 1", {S("$v *= $b;")}), S("$b *= $b;"), S("$e >>= 1;")})};
     }},
    {"count_primes", {},
     [] {
       return Nodes{S("int $v = 0;"),
                    Each("i", {S("int $x = $a[$i];"), S("boolean $p = $x > 1;"),
                               For("int $d = 2", "$d * $d <= $x", "$d++", {If("$x % $d == 0", {S("$p = false;"), S("break;")})}),
                               If("$p", {S("$v++;")})})};
     },
     [] {
       return Nodes{S("int $v = 0;"),
                    Each("i", {S("int $x = $a[$i];"), S("int $d = 2;"), While("$d < $x && $x % $d != 0", {S("$d++;")}),
                               If("$x > 1 && $d == $x", {S("$v++;")})})};
     }},
    {"digit_sum", {},
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("int $x = Math.abs($a[$i]);"), While("$x > 0", {S("$v += $x % 10;"), S("$x /= 10;")})})};
     },
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("String $s = String.valueOf(Math.abs($a[$i]));"),
                               For("int $j = 0", "$j < $s.length()", "$j++", {S("$v += $s.charAt($j) - '0';")})})};
     }},
    {"count_value", {{0, 20}},
     [] { return Nodes{S("int $v = 0;"), S("for (int $x : $a) { if ($x == @0) { $v++; } }")}; },
     [] { return Nodes{S("int $v = 0;"), Each("i", {S("$v += $a[$i] == @0 ? 1 : 0;")})}; }},
    {"palindrome", {{5, 50}},
     [] {
       return Nodes{S("int $lo = 0;"), S("int $hi = $a.length - 1;"), S("boolean $p = true;"),
                    While("$lo < $hi", {If("$a[$lo] != $a[$hi]", {S("$p = false;"), S("break;")}), S("$lo++;"), S("$hi--;")}),
                    S("long $v = $p ? @0 : 0;")};
     },
     [] {
       return Nodes{S("boolean $p = true;"),
                    For("int $i = 0", "$i < $a.length / 2", "$i++", {If("$a[$i] != $a[$a.length - 1 - $i]", {S("$p = false;")})}),
                    S("long $v = $p ? @0 : 0;")};
     }},
    {"second_largest", {},
     [] {
       return Nodes{S("int $x = Integer.MIN_VALUE;"), S("int $y = Integer.MIN_VALUE;"),
                    Each("i", {If("$a[$i] > $x", {S("$y = $x;"), S("$x = $a[$i];")},
                                  {If("$a[$i] > $y && $a[$i] != $x", {S("$y = $a[$i];")})})}),
                    S("long $v = $y == Integer.MIN_VALUE ? 0 : $y;")};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"), S("long $v = 0;"),
                    For("int $i = $c.length - 2", "$i >= 0", "$i--", {If("$c[$i] != $c[$c.length - 1]", {S("$v = $c[$i];"), S("break;")})})};
     }},
    {"average", {},
     [] {
       return Nodes{S("long $t = 0;"), Each("i", {S("$t += $a[$i];")}), S("long $v = $a.length == 0 ? 0 : $t / $a.length;")};
     },
     [] {
       return Nodes{S("long $t = 0;"), S("int $n = 0;"), S("for (int $x : $a) { $t += $x; $n++; }"),
                    S("long $v = $n == 0 ? 0 : $t / $n;")};
     }},
    {"product_mod", {{7, 97}},
     [] { return Nodes{S("long $v = 1;"), Each("i", {S("$v = ($v * (($a[$i] % @0 + @0) % @0)) % @0;")})}; },
     [] {
       return Nodes{S("long $v = 1;"), S("int $i = $a.length;"),
                    While("$i > 0", {S("$i--;"), S("long $m = (($a[$i] % @0) + @0) % @0;"), S("$v = ($v * $m) % @0;")})};
     }},
    {"alternating", {},
     [] { return Nodes{S("long $v = 0;"), Each("i", {If("$i % 2 == 0", {S("$v += $a[$i];")}, {S("$v -= $a[$i];")})})}; },
     [] { return Nodes{S("long $v = 0;"), S("int $sign = 1;"), Each("i", {S("$v += $sign * $a[$i];"), S("$sign = -$sign;")})}; }},
    {"inversions", {},
     [] {
       return Nodes{S("int $v = 0;"),
                    Each("i", {For("int $j = $i + 1", "$j < $a.length", "$j++", {If("$a[$i] > $a[$j]", {S("$v++;")})})})};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("int $v = 0;"),
                    For("int $i = 1", "$i < $c.length", "$i++",
                        {S("int $j = $i;"),
                         While("$j > 0 && $c[$j - 1] > $c[$j]",
                               {S("int $t = $c[$j];"), S("$c[$j] = $c[$j - 1];"), S("$c[$j - 1] = $t;"), S("$j--;"), S("$v++;")})})};
     }},
    {"kadane", {},
     [] {
       return Nodes{S("long $best = Long.MIN_VALUE;"), S("long $cur = 0;"),
                    Each("i", {S("$cur = Math.max($a[$i], $cur + $a[$i]);"), S("$best = Math.max($best, $cur);")}),
                    S("long $v = $a.length == 0 ? 0 : $best;")};
     },
     [] {
       return Nodes{S("long $best = Long.MIN_VALUE;"),
                    Each("i", {S("long $s = 0;"), For("int $j = $i", "$j < $a.length", "$j++",
                                                      {S("$s += $a[$j];"), If("$s > $best", {S("$best = $s;")})})}),
                    S("long $v = $a.length == 0 ? 0 : $best;")};
     }},
    {"xor_all", {},
     [] { return Nodes{S("int $v = 0;"), Each("i", {S("$v ^= $a[$i];")})}; },
     [] { return Nodes{S("int $v = 0;"), S("for (int $x : $a) { $v = $v ^ $x; }")}; }},
    {"distinct", {},
     [] {
       return Nodes{S("int $v = 0;"),
                    Each("i", {S("boolean $seen = false;"),
                               For("int $j = 0", "$j < $i", "$j++", {If("$a[$j] == $a[$i]", {S("$seen = true;"), S("break;")})}),
                               If("!$seen", {S("$v++;")})})};
     },
     [] {
       return Nodes{S("int[] $c = $a.clone();"), S("java.util.Arrays.sort($c);"), S("int $v = $c.length > 0 ? 1 : 0;"),
                    For("int $i = 1", "$i < $c.length", "$i++", {If("$c[$i] != $c[$i - 1]", {S("$v++;")})})};
     }},
    {"longest_run", {},
     [] {
       return Nodes{S("int $v = $a.length > 0 ? 1 : 0;"), S("int $run = 1;"),
                    Each("i", {If("$a[$i] > $a[$i - 1]", {S("$run++;"), If("$run > $v", {S("$v = $run;")})}, {S("$run = 1;")})}, "1")};
     },
     [] {
       return Nodes{S("int $v = $a.length > 0 ? 1 : 0;"), S("int $run = 1;"),
                    Each("i", {S("$run = $a[$i] > $a[$i - 1] ? $run + 1 : 1;"), S("$v = Math.max($v, $run);")}, "1")};
     }},
    {"pair_sum", {{10, 60}},
     [] {
       return Nodes{S("int $v = 0;"),
                    Each("i", {For("int $j = $i + 1", "$j < $a.length", "$j++", {If("$a[$i] + $a[$j] == @0", {S("$v++;")})})})};
     },
     [] {
       return Nodes{S("int $v = 0;"),
                    For("int $j = 1", "$j < $a.length", "$j++", {For("int $i = 0", "$i < $j", "$i++", {If("$a[$j] == @0 - $a[$i]", {S("$v++;")})})})};
     }},
    {"rotate", {{1, 5}},
     [] {
       return Nodes{S("int[] $c = new int[$a.length];"), Each("i", {S("$c[$i] = $a[($i + @0) % $a.length];")}),
                    S("long $v = $c.length > 0 ? $c[0] * 3L + $c[$c.length - 1] : 0;")};
     },
     [] {
       return Nodes{S("int[] $c = new int[$a.length];"), S("int $k = $a.length == 0 ? 0 : @0 % $a.length;"),
                    S("System.arraycopy($a, $k, $c, 0, $a.length - $k);"), S("System.arraycopy($a, 0, $c, $a.length - $k, $k);"),
                    S("long $v = $c.length > 0 ? $c[0] * 3L + $c[$c.length - 1] : 0;")};
     }},
    {"digit_count", {},
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("int $x = Math.abs($a[$i]);"), S("$v++;"), While("$x >= 10", {S("$x /= 10;"), S("$v++;")})})};
     },
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v += Integer.toString(Math.abs($a[$i])).length();")})}; }},
    {"bit_count", {},
     [] {
       return Nodes{S("long $v = 0;"), Each("i", {S("int $x = $a[$i];"), While("$x != 0", {S("$x &= $x - 1;"), S("$v++;")})})};
     },
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v += Integer.bitCount($a[$i]);")})}; }},
    {"collatz", {{3, 27}},
     [] {
       return Nodes{S("long $x = ($a.length > 0 ? Math.abs($a[0]) : 0) + @0;"), S("int $v = 0;"),
                    While("$x != 1 && $v < 500", {S("$x = $x % 2 == 0 ? $x / 2 : 3 * $x + 1;"), S("$v++;")})};
     },
     [] {
       return Nodes{S("long $x = ($a.length > 0 ? Math.abs($a[0]) : 0) + @0;"), S("int $v = 0;"),
                    While("$x != 1 && $v < 500", {If("$x % 2 == 0", {S("$x = $x / 2;")}, {S("$x = 3 * $x + 1;")}), S("$v++;")})};
     }},
    {"triangle", {{5, 30}},
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("long $x = Math.abs($a[$i]) % @0;"), S("$v += $x * ($x + 1) / 2;")})}; },
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("int $x = Math.abs($a[$i]) % @0;"), For("int $j = 1", "$j <= $x", "$j++", {S("$v += $j;")})})};
     }},
    {"max_gap", {},
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("long $d = Math.abs((long) $a[$i] - $a[$i - 1]);"), If("$d > $v", {S("$v = $d;")})}, "1")};
     },
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v = Math.max($v, Math.abs((long) $a[$i] - $a[$i - 1]));")}, "1")}; }},
    {"in_range", {{-5, 10}, {20, 70}},
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("$a[$i] >= @0 && $a[$i] <= @1", {S("$v++;")})})}; },
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("!($a[$i] < @0 || $a[$i] > @1)", {S("$v += 1;")})})}; }},
    {"squares", {},
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v += (long) $a[$i] * $a[$i];")})}; },
     [] { return Nodes{S("long $v = 0;"), S("for (int $x : $a) { $v += (long) Math.pow($x, 2); }")}; }},
    {"horner", {{3, 37}},
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v = $v * @0 + $a[$i];")})}; },
     [] {
       return Nodes{S("long $v = 0;"), S("long $pw = 1;"),
                    For("int $i = $a.length - 1", "$i >= 0", "$i--", {S("$v += $a[$i] * $pw;"), S("$pw *= @0;")})};
     }},
    {"clamp_sum", {{5, 40}},
     [] { return Nodes{S("long $v = 0;"), Each("i", {S("$v += Math.min(Math.max($a[$i], -@0), @0);")})}; },
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {If("$a[$i] > @0", {S("$v += @0;")}, {If("$a[$i] < -@0", {S("$v -= @0;")}, {S("$v += $a[$i];")})})})};
     }},
    {"argmax", {},
     [] { return Nodes{S("int $v = 0;"), Each("i", {If("$a[$i] > $a[$v]", {S("$v = $i;")})})}; },
     [] {
       return Nodes{S("int $v = 0;"), S("int $best = Integer.MIN_VALUE;"),
                    Each("i", {If("$a[$i] > $best", {S("$best = $a[$i];"), S("$v = $i;")})})};
     }},
    {"join_count", {{0, 9}},
     [] {
       return Nodes{S("StringBuilder $sb = new StringBuilder();"), Each("i", {S("$sb.append($a[$i]).append(',');")}),
                    S("long $v = 0;"),
                    For("int $j = 0", "$j < $sb.length()", "$j++", {If("$sb.charAt($j) == (char) ('0' + @0)", {S("$v++;")})})};
     },
     [] {
       return Nodes{S("String $s = java.util.Arrays.toString($a);"), S("long $v = 0;"),
                    S("for (char $ch : $s.toCharArray()) { if ($ch == (char) ('0' + @0)) { $v++; } }")};
     }},
    {"reverse_numbers", {},
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("int $x = Math.abs($a[$i]);"), S("int $rev = 0;"),
                               While("$x > 0", {S("$rev = $rev * 10 + $x % 10;"), S("$x /= 10;")}), If("$rev == Math.abs($a[$i])", {S("$v++;")})})};
     },
     [] {
       return Nodes{S("long $v = 0;"),
                    Each("i", {S("String $s = String.valueOf(Math.abs($a[$i]));"),
                               If("new StringBuilder($s).reverse().toString().equals($s)", {S("$v++;")})})};
     }},
};

constexpr std::size_t kStepsPerProblem = 2;

const char* const kArrayNames[] = {"values", "nums", "data", "arr", "input", "items", "xs", "numbers", "elems", "samples"};
const char* const kResultNames[] = {"result", "answer", "res", "outcome", "ret", "agg", "summary", "acc0"};
const char* const kFunctionNames[] = {"solve", "compute", "process", "evaluate", "analyze", "calc", "score", "measure",
                                      "reduce", "summarize", "digest", "transform", "aggregate", "inspect", "crunch",
                                      "tally", "examine", "resolve", "handle", "work"};
const char* const kLocalNames[] = {
    "i", "j", "k", "m", "n", "p", "q", "t", "u", "w", "x", "y", "z", "idx", "pos", "cur", "acc", "sum", "total", "count",
    "cnt", "best", "val", "value", "tmp", "temp", "out", "lo", "hi", "mid", "left", "right", "first", "second", "prev",
    "next", "num", "digit", "base", "exp", "len", "size", "step", "run", "flag", "found", "seen", "sign", "limit",
    "bound", "low", "high", "key", "item", "elem", "entry", "part", "mark", "spot", "cursor", "slot", "copy", "buf",
    "aux", "work", "probe", "term", "cell", "node", "head", "tail", "span", "gap", "unit", "level", "depth", "weight"};
const char* const kComments[] = {"// walk the input", "// accumulate", "/* helper step */", "// edge case",
                                 "// main loop", "/* keep going */", "// update state", "// TODO tidy up",
                                 "// combine", "/* result so far */"};
const char* const kDeadStatements[] = {"int $dead = @0;", "long $dead = (long) $a.length * @0;", "boolean $dead = $a.length > @0;",
                                       "double $dead = @0 / 2.0;", "int[] $dead = new int[@0];",
                                       "String $dead = \"tmp\" + @0;", "if ($a.length < 0) { return -@0; }"};

enum Level : int { kOriginal = 0, kT1 = 1, kT2 = 2, kST3 = 3, kMT3 = 4, kT4 = 5 };

struct StepInstance {
  std::size_t def = 0;
  std::vector<int> literals;
};

struct Problem {
  std::vector<StepInstance> steps;
  int fold = 0;  // 0: +=, 1: ^=, 2: max
  int init = 0;
  std::uint64_t name_seed = 0;
};

struct Style {
  std::string indent = "    ";
  bool allman = false;
  double comment_rate = 0.0;
  double blank_rate = 0.0;
};

// Prefixes step-local placeholders with the step index so names stay unique.
std::string scope_text(const std::string& text, std::size_t step) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '$' || c == '@') && i + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string name = text.substr(i + 1, j - i - 1);
      if (c == '$' && (name == "a" || name == "r" || name == "f")) {
        out += text.substr(i, j - i);
      } else {
        out += c;
        out += "s" + std::to_string(step) + "_" + name;
      }
      i = j - 1;
    } else {
      out += c;
    }
  }
  return out;
}

void scope_nodes(Nodes& nodes, std::size_t step) {
  for (Node& n : nodes) {
    n.text = scope_text(n.text, step);
    n.init = scope_text(n.init, step);
    n.update = scope_text(n.update, step);
    scope_nodes(n.body, step);
    scope_nodes(n.orelse, step);
  }
}

void toggle_loops(Nodes& nodes) {
  for (Node& n : nodes) {
    if (n.kind == Node::Kind::Loop) n.as_while = !n.as_while;
    toggle_loops(n.body);
    toggle_loops(n.orelse);
  }
}

class Renderer {
 public:
  Renderer(const Style& style, Rng* rng) : style_(style), rng_(rng) {}

  void nodes(const Nodes& list, std::size_t depth) {
    for (const Node& n : list) node(n, depth);
  }

  void line(const std::string& text, std::size_t depth) {
    if (rng_ && style_.blank_rate > 0.0 && rng_->uniform() < style_.blank_rate) out_ += "\n";
    if (rng_ && style_.comment_rate > 0.0 && rng_->uniform() < style_.comment_rate) {
      out_ += pad(depth) + kComments[rng_->below(std::size(kComments))] + "\n";
    }
    out_ += pad(depth) + text + "\n";
  }

  void open(const std::string& header, std::size_t depth) {
    if (style_.allman) {
      line(header, depth);
      out_ += pad(depth) + "{\n";
    } else {
      line(header + " {", depth);
    }
  }

  void close(std::size_t depth, const std::string& suffix = "") { out_ += pad(depth) + "}" + suffix + "\n"; }

  std::string take() { return std::move(out_); }

 private:
  std::string pad(std::size_t depth) const {
    std::string s;
    for (std::size_t i = 0; i < depth; ++i) s += style_.indent;
    return s;
  }

  void node(const Node& n, std::size_t depth) {
    switch (n.kind) {
      case Node::Kind::Stmt:
        line(n.text, depth);
        break;
      case Node::Kind::If:
        open("if (" + n.text + ")", depth);
        nodes(n.body, depth + 1);
        if (n.orelse.empty()) {
          close(depth);
        } else {
          close(depth);
          open("else", depth);
          nodes(n.orelse, depth + 1);
          close(depth);
        }
        break;
      case Node::Kind::Loop:
        if (n.as_while) {
          if (!n.init.empty()) line(n.init + ";", depth);
          open("while (" + n.text + ")", depth);
          nodes(n.body, depth + 1);
          if (!n.update.empty()) line(n.update + ";", depth + 1);
          close(depth);
        } else {
          open("for (" + n.init + "; " + n.text + "; " + n.update + ")", depth);
          nodes(n.body, depth + 1);
          close(depth);
        }
        break;
    }
  }

  const Style& style_;
  Rng* rng_;
  std::string out_;
};

// Replaces $placeholders with identifiers and @placeholders with literals.
std::string substitute(const std::string& code, const std::map<std::string, std::string>& names,
                       const std::map<std::string, std::string>& literals) {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const char c = code[i];
    if ((c == '$' || c == '@') && i + 1 < code.size() && std::isalnum(static_cast<unsigned char>(code[i + 1]))) {
      std::size_t j = i + 1;
      while (j < code.size() && (std::isalnum(static_cast<unsigned char>(code[j])) || code[j] == '_')) ++j;
      const std::string key = code.substr(i + 1, j - i - 1);
      const auto& table = c == '$' ? names : literals;
      const auto it = table.find(key);
      if (it == table.end()) throw ConfigError("synthetic template has unbound placeholder " + std::string(1, c) + key);
      out += it->second;
      i = j - 1;
    } else {
      out += c;
    }
  }
  return out;
}

void collect_placeholders(const std::string& text, std::vector<std::string>& order, std::set<std::string>& seen) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '$' || i + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1]))) continue;
    std::size_t j = i + 1;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
    std::string key = text.substr(i + 1, j - i - 1);
    if (seen.insert(key).second) order.push_back(std::move(key));
    i = j - 1;
  }
}

void collect_nodes(const Nodes& nodes, std::vector<std::string>& order, std::set<std::string>& seen) {
  for (const Node& n : nodes) {
    collect_placeholders(n.init, order, seen);
    collect_placeholders(n.text, order, seen);
    collect_placeholders(n.update, order, seen);
    collect_nodes(n.body, order, seen);
    collect_nodes(n.orelse, order, seen);
  }
}

std::map<std::string, std::string> assign_names(const std::vector<std::string>& keys, Rng& rng) {
  std::map<std::string, std::string> names;
  names["a"] = kArrayNames[rng.below(std::size(kArrayNames))];
  names["r"] = kResultNames[rng.below(std::size(kResultNames))];
  names["f"] = kFunctionNames[rng.below(std::size(kFunctionNames))];
  std::vector<std::string> pool(std::begin(kLocalNames), std::end(kLocalNames));
  rng.shuffle(pool);
  std::set<std::string> used{names["a"], names["r"], names["f"]};
  std::size_t next = 0;
  for (const auto& key : keys) {
    if (names.contains(key)) continue;
    while (next < pool.size() && used.contains(pool[next])) ++next;
    std::string name = next < pool.size() ? pool[next++] : "v" + std::to_string(names.size());
    used.insert(name);
    names[key] = std::move(name);
  }
  return names;
}

int draw_literal(std::pair<int, int> range, Rng& rng) {
  return range.first + static_cast<int>(rng.below(static_cast<std::uint64_t>(range.second - range.first + 1)));
}

std::string fold_statement(int fold, std::size_t step) {
  const std::string v = "$s" + std::to_string(step) + "_v";
  switch (fold) {
    case 0: return "$r += " + v + ";";
    case 1: return "$r ^= " + v + ";";
    default: return "$r = Math.max($r, " + v + ");";
  }
}

// Renders one variant of a problem at the given transformation level.
std::string render_variant(const Problem& problem, int level, Rng& rng) {
  const bool alternates = level >= kT4;
  std::vector<Nodes> chunks;
  std::map<std::string, std::string> literals;
  for (std::size_t s = 0; s < problem.steps.size(); ++s) {
    const StepDef& def = kSteps[problem.steps[s].def];
    Nodes body = alternates && def.alternate ? def.alternate() : def.primary();
    scope_nodes(body, s);
    if (alternates) toggle_loops(body);
    body.push_back(S(fold_statement(problem.fold, s)));
    chunks.push_back(std::move(body));
    for (std::size_t k = 0; k < def.literals.size(); ++k) {
      int value = problem.steps[s].literals[k];
      if (level >= kT2) {
        const auto range = def.literals[k];
        if (range.second > range.first) {
          int fresh = value;
          while (fresh == value) fresh = draw_literal(range, rng);
          value = fresh;
        }
      }
      literals["s" + std::to_string(s) + "_" + std::to_string(k)] = std::to_string(value);
    }
  }

  if (level == kST3 || level == kMT3) {
    std::vector<std::size_t> perm(chunks.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    while (std::is_sorted(perm.begin(), perm.end())) rng.shuffle(perm);
    std::vector<Nodes> reordered;
    for (std::size_t i : perm) reordered.push_back(chunks[i]);
    chunks = std::move(reordered);
  }

  Nodes top{S("long $r = " + std::to_string(problem.init) + ";")};
  for (auto& chunk : chunks) top.insert(top.end(), chunk.begin(), chunk.end());

  const std::size_t dead = level == kST3 ? 1 : level == kMT3 ? 3 : 0;
  for (std::size_t d = 0; d < dead; ++d) {
    std::string text = kDeadStatements[rng.below(std::size(kDeadStatements))];
    text = scope_text(text, 100 + d);
    literals["s" + std::to_string(100 + d) + "_0"] = std::to_string(2 + rng.below(40));
    const std::size_t at = 1 + rng.below(top.size());
    top.insert(top.begin() + static_cast<std::ptrdiff_t>(at), S(std::move(text)));
  }
  top.push_back(S("return $r;"));

  std::vector<std::string> keys{"f", "a", "r"};
  std::set<std::string> seen(keys.begin(), keys.end());
  collect_nodes(top, keys, seen);

  Rng name_rng(problem.name_seed);
  const auto names = level >= kT2 ? assign_names(keys, rng) : assign_names(keys, name_rng);

  Style style;
  if (level >= kT1) {
    const char* const indents[] = {"  ", "    ", "\t", "   "};
    style.indent = indents[rng.below(std::size(indents))];
    style.allman = rng.below(2) == 0;
    style.comment_rate = 0.15 + 0.25 * rng.uniform();
    style.blank_rate = 0.2 * rng.uniform();
  }
  Renderer out(style, level >= kT1 ? &rng : nullptr);
  out.open("public static long $f(int[] $a)", 0);
  out.nodes(top, 1);
  out.close(0);
  return substitute(out.take(), names, literals);
}

int level_of(std::size_t variant) { return variant == 0 ? kOriginal : static_cast<int>((variant - 1) % 5) + 1; }

// Distinct variants always have v2 > 0, so the level is at least T1.
CloneType pair_type(std::size_t v1, std::size_t v2) {
  return static_cast<CloneType>(std::max(level_of(v1), level_of(v2)) - 1);
}

std::size_t shared_steps(const Problem& a, const Problem& b) {
  std::size_t n = 0;
  for (const auto& x : a.steps) {
    for (const auto& y : b.steps) n += x.def == y.def ? 1 : 0;
  }
  return n;
}

// Picks step sets so that two problems share at most one step where possible;
// when the bank is exhausted the overlap bound is relaxed one step at a time.
std::vector<Problem> compose_problems(std::size_t count, Rng& rng) {
  std::vector<Problem> problems;
  const std::size_t bank = std::size(kSteps);
  std::size_t overlap = 1;
  std::size_t failures = 0;
  while (problems.size() < count) {
    std::vector<std::size_t> ids(bank);
    for (std::size_t i = 0; i < bank; ++i) ids[i] = i;
    rng.shuffle(ids);
    Problem p;
    for (std::size_t s = 0; s < kStepsPerProblem; ++s) p.steps.push_back({ids[s], {}});
    bool ok = true;
    for (const Problem& q : problems) {
      if (shared_steps(p, q) > overlap) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (++failures > 20000) {
        ++overlap;
        failures = 0;
      }
      continue;
    }
    failures = 0;
    for (auto& step : p.steps) {
      for (const auto& range : kSteps[step.def].literals) step.literals.push_back(draw_literal(range, rng));
    }
    p.fold = static_cast<int>(rng.below(3));
    p.init = static_cast<int>(rng.below(2)) * static_cast<int>(1 + rng.below(9));
    p.name_seed = rng.next();
    problems.push_back(std::move(p));
  }
  return problems;
}

std::string problem_id(std::size_t p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "p%04zu", p);
  return buf;
}

std::string function_id(std::size_t p, std::size_t v) { return problem_id(p) + ".v" + std::to_string(v); }

}  // namespace

std::size_t synthetic_step_count() { return std::size(kSteps); }

std::string synthetic_problem(const std::string& function_id) {
  const auto dot = function_id.rfind('.');
  return dot == std::string::npos ? function_id : function_id.substr(0, dot);
}

ClonePairDataset SyntheticBenchmark::dataset(Split split) const {
  ClonePairDataset d{functions, {}, split};
  switch (split) {
    case Split::Train: d.pairs = train; break;
    case Split::Validation: d.pairs = validation; break;
    case Split::Test: d.pairs = test; break;
  }
  return d;
}

std::uint64_t SyntheticBenchmark::digest() const {
  Fnv1a h;
  h.value(functions.digest());
  for (const auto* list : {&train, &validation, &test}) {
    h.value(static_cast<std::uint64_t>(list->size()));
    for (const auto& p : *list) {
      h.str(p.id1).str(p.id2).value(p.label);
      h.value(p.clone_type ? static_cast<int>(*p.clone_type) + 1 : 0);
    }
  }
  return h.digest();
}

SyntheticBenchmark generate_synthetic(const SynthConfig& cfg) {
  if (cfg.problems < 2) throw ConfigError("synthetic benchmark needs at least 2 problems");
  if (cfg.variants < 1) throw ConfigError("synthetic benchmark needs at least 1 variant per problem");
  if (!(cfg.negative_ratio >= 0.0)) throw ConfigError("negative ratio must be non-negative");
  if (!(cfg.test_fraction >= 0.0) || !(cfg.validation_fraction >= 0.0) ||
      cfg.test_fraction + cfg.validation_fraction > 1.0) {
    throw ConfigError("split fractions must be non-negative and sum to at most 1");
  }

  Rng rng(cfg.seed);
  const std::vector<Problem> problems = compose_problems(cfg.problems, rng);

  SyntheticBenchmark bench;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    for (std::size_t v = 0; v < cfg.variants; ++v) {
      Rng vr(cfg.seed ^ (0x51ed2701ULL * (p + 1)) ^ (0x2545f491ULL * (v + 1) << 20));
      StoredFunction fn;
      fn.id = function_id(p, v);
      fn.file_path = "synthetic/" + problem_id(p) + ".java";
      fn.code = render_variant(problems[p], level_of(v), vr);
      fn.tokens = tokenize(fn.code, Language::JavaLike).tokens;
      fn.start_line = 1;
      fn.end_line = static_cast<std::size_t>(std::count(fn.code.begin(), fn.code.end(), '\n'));
      bench.functions.add(std::move(fn));
    }
  }

  // Problems are assigned to splits before any pair is formed.
  std::vector<std::size_t> order(problems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  const auto n = static_cast<double>(problems.size());
  const auto n_test = static_cast<std::size_t>(std::llround(cfg.test_fraction * n));
  const auto n_val = std::min(problems.size() - n_test, static_cast<std::size_t>(std::llround(cfg.validation_fraction * n)));
  std::vector<std::vector<std::size_t>> groups(3);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t g = i < n_test ? 2 : i < n_test + n_val ? 1 : 0;
    groups[g].push_back(order[i]);
  }

  std::vector<ClonePair>* outs[] = {&bench.train, &bench.validation, &bench.test};
  for (std::size_t g = 0; g < 3; ++g) {
    auto& members = groups[g];
    std::sort(members.begin(), members.end());
    auto& pairs = *outs[g];
    for (std::size_t p : members) {
      for (std::size_t v1 = 0; v1 < cfg.variants; ++v1) {
        for (std::size_t v2 = v1 + 1; v2 < cfg.variants; ++v2) {
          pairs.push_back({function_id(p, v1), function_id(p, v2), 1, pair_type(v1, v2)});
        }
      }
    }
    const std::size_t positives = pairs.size();
    if (members.size() < 2) continue;
    const std::size_t cross = cfg.variants * cfg.variants * members.size() * (members.size() - 1) / 2;
    const std::size_t wanted = std::min(cross, static_cast<std::size_t>(std::llround(cfg.negative_ratio * static_cast<double>(positives))));
    std::set<std::pair<std::string, std::string>> taken;
    while (taken.size() < wanted) {
      const std::size_t pa = members[rng.below(members.size())];
      const std::size_t pb = members[rng.below(members.size())];
      if (pa == pb) continue;
      std::string a = function_id(pa, rng.below(cfg.variants));
      std::string b = function_id(pb, rng.below(cfg.variants));
      if (b < a) std::swap(a, b);
      if (!taken.insert({a, b}).second) continue;
      pairs.push_back({a, b, -1, std::nullopt});
    }
  }
  return bench;
}

}  // namespace alphacc
