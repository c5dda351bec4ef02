#include "luinv/classify.hpp"

#include <stdexcept>

namespace luinv {

std::string to_string(SloccClass c) {
    switch (c) {
        case SloccClass::Null: return "Null";
        case SloccClass::FullySeparable: return "1|2|3";
        case SloccClass::Bisep1_23: return "1|23";
        case SloccClass::Bisep2_13: return "2|13";
        case SloccClass::Bisep3_12: return "3|12";
        case SloccClass::W: return "W";
        case SloccClass::GHZ: return "GHZ";
    }
    return "?";
}

std::array<std::string, 10> pattern_column_names() {
    return {"n2", "y2", "c2_1", "c2_2", "c2_3", "g2_1", "g2_2", "g2_3", "omega2", "tau2"};
}

std::array<bool, 10> class_pattern(SloccClass c) {
    // Columns: n2, y2, c2_1, c2_2, c2_3, g2_1, g2_2, g2_3, omega2, tau2.
    switch (c) {
        case SloccClass::Null:
            return {false, false, false, false, false, false, false, false, false, false};
        case SloccClass::FullySeparable:
            return {true, false, false, false, false, false, false, false, false, false};
        case SloccClass::Bisep1_23:
            return {true, true, false, true, true, true, false, false, false, false};
        case SloccClass::Bisep2_13:
            return {true, true, true, false, true, false, true, false, false, false};
        case SloccClass::Bisep3_12:
            return {true, true, true, true, false, false, false, true, false, false};
        case SloccClass::W:
            return {true, true, true, true, true, true, true, true, true, false};
        case SloccClass::GHZ:
            return {true, true, true, true, true, true, true, true, true, true};
    }
    throw std::logic_error("class_pattern: bad class");
}

Classification classify(const InvariantSet& inv, double tol) {
    if (tol < 0.0) throw std::invalid_argument("classify: tol must be >= 0");
    Classification r;
    const std::array<double, 10> values = {inv.n2,    inv.y2,    inv.c2[0], inv.c2[1], inv.c2[2],
                                           inv.g2[0], inv.g2[1], inv.g2[2], inv.omega2, inv.tau2};
    for (int i = 0; i < 10; ++i) r.positive[i] = values[i] > tol;

    bool decided = true;
    if (!r.positive[0]) {
        r.cls = SloccClass::Null;
    } else if (r.positive[9]) {
        r.cls = SloccClass::GHZ;
    } else if (r.positive[8]) {
        r.cls = SloccClass::W;
    } else {
        int zeros = 0, zero_at = 0;
        for (int a = 0; a < 3; ++a)
            if (!r.positive[2 + a]) {
                ++zeros;
                zero_at = a;
            }
        if (zeros == 3) {
            r.cls = SloccClass::FullySeparable;
        } else if (zeros == 1) {
            r.cls = zero_at == 0   ? SloccClass::Bisep1_23
                    : zero_at == 1 ? SloccClass::Bisep2_13
                                   : SloccClass::Bisep3_12;
        } else {
            decided = false;
        }
    }

    // Match the full ten-column pattern; report the nearest row when the
    // decision above is impossible or its own columns disagree.
    const auto names = pattern_column_names();
    auto mismatches = [&](SloccClass c) {
        int m = 0;
        const auto pat = class_pattern(c);
        for (int i = 0; i < 10; ++i) m += pat[i] != r.positive[i];
        return m;
    };
    if (!decided) {
        const SloccClass order[] = {SloccClass::Null,      SloccClass::FullySeparable,
                                    SloccClass::Bisep1_23, SloccClass::Bisep2_13,
                                    SloccClass::Bisep3_12, SloccClass::W,
                                    SloccClass::GHZ};
        int best = 11;
        for (SloccClass c : order) {
            const int m = mismatches(c);
            if (m < best) {
                best = m;
                r.cls = c;
            }
        }
    }
    const auto expected = class_pattern(r.cls);
    for (int i = 0; i < 10; ++i) {
        if (expected[i] != r.positive[i]) {
            r.consistent = false;
            if (!r.diagnostics.empty()) r.diagnostics += ", ";
            r.diagnostics += names[i];
            r.diagnostics += r.positive[i] ? " > tol but the class needs 0"
                                           : " <= tol but the class needs > 0";
        }
    }
    if (!decided && r.diagnostics.empty()) r.diagnostics = "no decision rule matched";
    if (!decided) r.consistent = false;
    return r;
}

}  // namespace luinv
