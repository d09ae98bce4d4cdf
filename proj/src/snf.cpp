#include "atlas/fpgroup.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace atlas {

IntMatrix IntMatrix::identity(long long n)
{
    IntMatrix m(n, n);
    for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix matmul(const IntMatrix &x, const IntMatrix &y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix out(x.rows, y.cols);
    for (long long i = 0; i < x.rows; ++i)
        for (long long k = 0; k < x.cols; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (long long j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

long long det(const IntMatrix &m)
{
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    // fraction-free Gaussian elimination (Bareiss)
    long long n = m.rows;
    std::vector<__int128> a(n * n);
    for (long long i = 0; i < n * n; ++i) a[i] = m.a[i];
    __int128 sign = 1, prev = 1;
    for (long long k = 0; k < n - 1; ++k) {
        if (a[k * n + k] == 0) {
            long long p = -1;
            for (long long i = k + 1; i < n; ++i)
                if (a[i * n + k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (long long j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (long long i = k + 1; i < n; ++i)
            for (long long j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return static_cast<long long>(sign * a[(n - 1) * n + (n - 1)]);
}

namespace {

void swap_rows(IntMatrix &m, long long i, long long j)
{
    for (long long c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMatrix &m, long long i, long long j)
{
    for (long long r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
void add_row(IntMatrix &m, long long dst, long long src, long long factor)
{
    for (long long c = 0; c < m.cols; ++c) m.at(dst, c) += factor * m.at(src, c);
}
void add_col(IntMatrix &m, long long dst, long long src, long long factor)
{
    for (long long r = 0; r < m.rows; ++r) m.at(r, dst) += factor * m.at(r, src);
}
void negate_row(IntMatrix &m, long long i)
{
    for (long long c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// smallest nonzero |entry| in the lower-right block starting at (s, s)
bool locate_min(const IntMatrix &d, long long s, long long &ir, long long &ic)
{
    long long best = 0;
    bool found = false;
    for (long long i = s; i < d.rows; ++i)
        for (long long j = s; j < d.cols; ++j) {
            long long v = std::llabs(d.at(i, j));
            if (v != 0 && (!found || v < best)) {
                best = v;
                ir = i;
                ic = j;
                found = true;
            }
        }
    return found;
}

bool is_lone(const IntMatrix &d, long long s)
{
    for (long long i = s + 1; i < d.rows; ++i)
        if (d.at(i, s) != 0) return false;
    for (long long j = s + 1; j < d.cols; ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

bool find_nondivisible(const IntMatrix &d, long long s, long long &ir, long long &ic)
{
    long long pivot = d.at(s, s);
    for (long long i = s + 1; i < d.rows; ++i)
        for (long long j = s + 1; j < d.cols; ++j)
            if (d.at(i, j) % pivot != 0) {
                ir = i;
                ic = j;
                return true;
            }
    return false;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix &m)
{
    SmithResult r;
    r.d = m;
    r.u = IntMatrix::identity(m.rows);
    r.v = IntMatrix::identity(m.cols);
    IntMatrix &d = r.d;

    long long nmin = std::min(m.rows, m.cols);
    for (long long i = 0; i < nmin; ++i) {
        for (;;) {
            long long ir = i, ic = i;
            if (!locate_min(d, i, ir, ic)) {
                // lower-right block is zero; done with the whole matrix
                i = nmin;
                break;
            }
            swap_rows(d, i, ir);
            swap_rows(r.u, i, ir);
            swap_cols(d, i, ic);
            swap_cols(r.v, i, ic);

            for (long long j = i + 1; j < d.rows; ++j)
                if (d.at(j, i) != 0) {
                    long long k = d.at(j, i) / d.at(i, i);
                    add_row(d, j, i, -k);
                    add_row(r.u, j, i, -k);
                }
            for (long long j = i + 1; j < d.cols; ++j)
                if (d.at(i, j) != 0) {
                    long long k = d.at(i, j) / d.at(i, i);
                    add_col(d, j, i, -k);
                    add_col(r.v, j, i, -k);
                }
            if (!is_lone(d, i)) continue;

            if (d.at(i, i) < 0) {
                negate_row(d, i);
                negate_row(r.u, i);
            }
            long long jr = 0, jc = 0;
            if (find_nondivisible(d, i, jr, jc)) {
                // pull the offending row up and keep reducing
                add_row(d, i, jr, 1);
                add_row(r.u, i, jr, 1);
                continue;
            }
            break;
        }
        if (i >= nmin) break;
    }

    // exact verification on every call
    IntMatrix check = matmul(matmul(r.u, m), r.v);
    if (!(check.a == d.a)) throw std::logic_error("smith_normal_form: U*M*V != D");
    for (long long i = 0; i + 1 < nmin; ++i) {
        long long a = d.at(i, i), b = d.at(i + 1, i + 1);
        if (a == 0 && b != 0) throw std::logic_error("smith_normal_form: zero before nonzero");
        if (a != 0 && b % a != 0) throw std::logic_error("smith_normal_form: divisibility");
    }
    return r;
}

} // namespace atlas
