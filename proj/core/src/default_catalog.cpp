#include "ramapi/catalog.hpp"

namespace ramapi {

// The built-in data: the level-2 degree-1/5 modular transformation and the
// four tables of rational series (z < 0 rows first within each level).
const std::string& default_catalog_text() {
    static const std::string text = R"(# built-in catalog
[meta]
source = builtin
version = 1

[transformation]
name = modular-l2-d5
s = 4
d = 5
alpha = 64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)
beta = 64*x*(1+x)^5/((1+4*x^2)*(1+22*x-4*x^2)^2)
m_squared = (1-2*x-4*x^2)/(1+22*x-4*x^2)

# ---- level 4 (s = 2) ----

[series]
name = l4.d3.neg
s = 2
d = 3
z = -1
a = 1/2
b = 2

[series]
name = l4.d5.neg
s = 2
d = 5
z = -1/8
a = 1/(2*sqrt(2))
b = 6/(2*sqrt(2))

[series]
name = l4.d3.pos
s = 2
d = 3
z = 1/4
a = 1/4
b = 6/4

[series]
name = l4.d7.pos
alias = eq2
s = 2
d = 7
z = 1/64
a = 5/16
b = 42/16

# ---- level 2 (s = 4) ----

[series]
name = l2.d3.neg
s = 4
d = 3
z = -1/4
a = 3/8
b = 20/8

[series]
name = l2.d4.neg
s = 4
d = 4
z = -(16*16)/(63*63)
a = 8/(9*sqrt(7))
b = 65/(9*sqrt(7))

[series]
name = l2.d5.neg
alias = eq9
s = 4
d = 5
z = -1/48
a = 3*sqrt(3)/16
b = 28*sqrt(3)/16

[series]
name = l2.d7.neg
s = 4
d = 7
z = -1/(18*18)
a = 23/72
b = 260/72

[series]
name = l2.d13.neg
s = 4
d = 13
z = -1/(5*72*72)
a = 41*sqrt(5)/288
b = 644*sqrt(5)/288

[series]
name = l2.d19.neg
s = 4
d = 19
z = -1/(882*882)
a = 1123/3528
b = 21460/3528

[series]
name = l2.d2.pos
s = 4
d = 2
z = 32/81
a = 2/9
b = 14/9

[series]
name = l2.d3.pos
s = 4
d = 3
z = 1/9
a = 1/(2*sqrt(3))
b = 8/(2*sqrt(3))

[series]
name = l2.d5.pos
alias = eq8
s = 4
d = 5
z = 1/81
a = 4/(9*sqrt(2))
b = 40/(9*sqrt(2))

[series]
name = l2.d9.pos
s = 4
d = 9
z = 1/(7*7*7*7)
a = 27/(49*sqrt(3))
b = 360/(49*sqrt(3))

[series]
name = l2.d11.pos
s = 4
d = 11
z = 1/(99*99)
a = 19/(18*sqrt(11))
b = 280/(18*sqrt(11))

[series]
name = l2.d29.pos
alias = eq4
s = 4
d = 29
z = 1/(99*99*99*99)
a = 4412/(9801*sqrt(2))
b = 105560/(9801*sqrt(2))

# ---- level 3 (s = 3) ----

[series]
name = l3.d3.neg
s = 3
d = 3
z = -9/16
a = sqrt(3)/4
b = 5*sqrt(3)/4

[series]
name = l3.d5.neg
s = 3
d = 5
z = -1/16
a = 7/(12*sqrt(3))
b = 51/(12*sqrt(3))

[series]
name = l3.d7.neg
s = 3
d = 7
z = -1/80
a = sqrt(15)/12
b = 9*sqrt(15)/12

[series]
name = l3.d11.neg
s = 3
d = 11
z = -1/1024
a = 106/(192*sqrt(3))
b = 1230/(192*sqrt(3))

[series]
name = l3.d13.neg
s = 3
d = 13
z = -1/3024
a = 26*sqrt(7)/216
b = 330*sqrt(7)/216

[series]
name = l3.d23.neg
s = 3
d = 23
z = -1/(500*500)
a = 827/(1500*sqrt(3))
b = 14151/(1500*sqrt(3))

[series]
name = l3.d2.pos
s = 3
d = 2
z = 1/2
a = 1/(3*sqrt(3))
b = 6/(3*sqrt(3))

[series]
name = l3.d4.pos
s = 3
d = 4
z = 2/27
a = 8/27
b = 60/27

[series]
name = l3.d5.pos
alias = eq3
s = 3
d = 5
z = 4/125
a = 8/(15*sqrt(3))
b = 66/(15*sqrt(3))

# ---- level 1 (s = 6) ----

[series]
name = l1.d2.neg
alias = eq5
s = 6
d = 2
z = -(4*4*4)/(5*5*5)
a = 8/(5*sqrt(15))
b = 63/(5*sqrt(15))

[series]
name = l1.d3.neg
s = 6
d = 3
z = -(3*3*3)/(8*8*8)
a = 15/(32*sqrt(2))
b = 154/(32*sqrt(2))

[series]
name = l1.d5.neg
s = 6
d = 5
z = -1/(8*8*8)
a = 25/(32*sqrt(6))
b = 342/(32*sqrt(6))

[series]
name = l1.d7.neg
s = 6
d = 7
z = -9/(40*40*40)
a = 279/(160*sqrt(30))
b = 4554/(160*sqrt(30))

[series]
name = l1.d11.neg
s = 6
d = 11
z = -1/(80*80*80)
a = 526*sqrt(15)/(80*80)
b = 10836*sqrt(15)/(80*80)

[series]
name = l1.d17.neg
s = 6
d = 17
z = -1/(440*440*440)
a = 10177*sqrt(330)/(3*440*440)
b = 261702*sqrt(330)/(3*440*440)

[series]
name = l1.d41.neg
s = 6
d = 41
z = -1/(53360*53360*53360)
a = 27182818*sqrt(10005)/(3*53360*53360)
b = 1090280268*sqrt(10005)/(3*53360*53360)

[series]
name = l1.d2.pos
s = 6
d = 2
z = (3*3*3)/(5*5*5)
a = 3/(5*sqrt(5))
b = 28/(5*sqrt(5))

[series]
name = l1.d3.pos
s = 6
d = 3
z = 4/(5*5*5)
a = 6/(5*sqrt(15))
b = 66/(5*sqrt(15))

[series]
name = l1.d4.pos
s = 6
d = 4
z = (2*2*2)/(11*11*11)
a = 20/(11*sqrt(33))
b = 252/(11*sqrt(33))

[series]
name = l1.d7.pos
s = 6
d = 7
z = (4*4*4)/(85*85*85)
a = 144*sqrt(3)/(85*sqrt(85))
b = 2394*sqrt(3)/(85*sqrt(85))
)";
    return text;
}

} // namespace ramapi
