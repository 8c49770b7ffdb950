#include "quadrature.hpp"

#include <cmath>

#include "errors.hpp"

namespace pintz {

namespace {

struct Ctx {
    const std::function<double(double)>& f;
    int max_depth;
    long max_evals;
    long evals = 0;
    double err_acc = 0.0;

    double eval(double x) {
        if (++evals > max_evals)
            throw QuadratureFailure("adaptive_simpson: evaluation budget exceeded");
        return f(x);
    }
};

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double recurse(Ctx& c, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = c.eval(lm), frm = c.eval(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || !(b - a > 0.0)) {
        c.err_acc += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth >= c.max_depth)
        throw QuadratureFailure("adaptive_simpson: max depth at interval [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "]");
    return recurse(c, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(c, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth,
                            long max_evals) {
    Ctx c{f, max_depth, max_evals};
    double fa = c.eval(a), fb = c.eval(b), fm = c.eval(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, b - a);
    double v = recurse(c, a, b, fa, fm, fb, whole, tol, 0);
    return {v, c.err_acc, c.evals};
}

} // namespace pintz
