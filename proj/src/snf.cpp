#include "fibrantkit/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace fibrantkit {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    SmithResult out;
    int t = 0;  // current pivot position
    const int R = m.rows, C = m.cols;
    while (t < R && t < C) {
        // find nonzero entry of minimal absolute value in the remaining block
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < R; ++r)
            for (int c = t; c < C; ++c) {
                const Int& v = m.at(r, c);
                if (v == 0) continue;
                Int av = v < 0 ? -v : v;
                if (pr < 0 || av < best) {
                    pr = r;
                    pc = c;
                    best = av;
                }
            }
        if (pr < 0) break;  // all zero
        // move pivot to (t,t)
        if (pr != t)
            for (int c = 0; c < C; ++c) std::swap(m.at(pr, c), m.at(t, c));
        if (pc != t)
            for (int r = 0; r < R; ++r) std::swap(m.at(r, pc), m.at(r, t));
        if (m.at(t, t) < 0)
            for (int c = t; c < C; ++c) m.at(t, c) = -m.at(t, c);

        // clear row and column t by repeated reduction
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < R; ++r) {
                Int q = m.at(r, t) / m.at(t, t);
                if (q != 0)
                    for (int c = t; c < C; ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    // remainder smaller than pivot: swap rows and restart
                    for (int c = t; c < C; ++c) std::swap(m.at(r, c), m.at(t, c));
                    if (m.at(t, t) < 0)
                        for (int c = t; c < C; ++c) m.at(t, c) = -m.at(t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int c = t + 1; c < C; ++c) {
                Int q = m.at(t, c) / m.at(t, t);
                if (q != 0)
                    for (int r = t; r < R; ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    for (int r = t; r < R; ++r) std::swap(m.at(r, c), m.at(r, t));
                    if (m.at(t, t) < 0)
                        for (int r = t; r < R; ++r) m.at(r, t) = -m.at(r, t);
                    clean = false;
                }
            }
        }
        // ensure pivot divides the remaining block; if not, fold the offending
        // row in and redo this pivot
        bool divides = true;
        for (int r = t + 1; r < R && divides; ++r)
            for (int c = t + 1; c < C && divides; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    for (int cc = t; cc < C; ++cc) m.at(t, cc) += m.at(r, cc);
                    divides = false;
                }
        if (!divides) continue;
        out.divisors.push_back(m.at(t, t));
        ++t;
    }
    out.rank = t;
    return out;
}

}  // namespace fibrantkit
