#pragma once

#include <cstdlib>

namespace liouville {

// Global numeric policy. Operations retry with doubled working precision until
// their post-condition tolerance is met or prec_ceiling triggers PrecisionExhausted.
struct Context {
    long start_prec = 128;      // bits
    long prec_ceiling = 4096;   // bits
    int degree_cap = 16;        // compositum degree cap for algebraic points
    long enum_budget = 100000000; // polynomial enumeration budget (count)

    static Context& global() {
        static Context ctx = make_default();
        return ctx;
    }

private:
    static Context make_default() {
        Context c;
        if (const char* e = std::getenv("LIOUVILLE_PREC_CEILING")) {
            long v = std::atol(e);
            if (v >= 64) c.prec_ceiling = v;
        }
        return c;
    }
};

} // namespace liouville
