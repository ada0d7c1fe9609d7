#include "forestprob/rational.hpp"

#include "forestprob/errors.hpp"

namespace forestprob {

Integer factorial(int n) {
    if (n < 0) throw SpecError("factorial of negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string fraction_string(const Rational& r) {
    return rational_num(r).str() + "/" + rational_den(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace forestprob
