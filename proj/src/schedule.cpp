#include "schedule.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sc {

std::pair<long long, bool> Schedule::integer_view(int i) const {
    long double li = at(L, i);
    if (li < 1.0L) return {0, true};  // schedule exhausted
    return {static_cast<long long>(std::floor(static_cast<double>(li))), false};
}

Schedule build_schedule(double delta, double epsilon, double gamma) {
    if (!(delta >= 3)) throw std::invalid_argument("need Delta >= 3 so that ln Delta > 1");
    if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must lie in (0,1)");
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");

    Schedule s;
    s.delta = delta;
    s.epsilon = epsilon;
    s.gamma = gamma;
    s.epsilon_warning = epsilon >= 1.0;

    const long double D = delta;
    const long double logd = std::log(D);
    const long double log2d = logd * logd;
    s.K = static_cast<long double>(epsilon) / 1000.0L;
    s.eta = s.K / logd;

    long double L = (1.0L + static_cast<long double>(epsilon)) * D / logd;
    long double T = D;
    long double Q = static_cast<long double>(gamma) * D / (10.0L * std::pow(logd, 18.0L));
    long double B = D * (static_cast<long double>(gamma) - 1.0L / log2d);

    const int cap = static_cast<int>(std::ceil(10.0L * std::pow(logd, 1.5L)));
    for (int i = 1; i <= cap; ++i) {
        long double keep = std::exp(T * std::log1p(-s.eta / L));
        s.L.push_back(L);
        s.T.push_back(T);
        s.keep.push_back(keep);
        s.Q.push_back(Q);
        s.X.push_back(std::pow(T, static_cast<long double>(gamma)));
        s.B.push_back(B);
        s.r.push_back(T / L);
        if (!(std::isfinite(static_cast<double>(L)) && L > 0 && T > 0))
            throw std::runtime_error("schedule produced a non-finite or non-positive value");
        if (L >= 8.0L * T) {
            s.i_star = i;
            break;
        }
        long double tmul = keep * (1.0L - s.eta * keep) * (1.0L + 1.0L / log2d);
        L = L * keep * (1.0L - 1.0L / log2d);
        T = T * tmul;
        Q = Q * tmul;
        B = B * tmul;
    }
    return s;
}

ScheduleReport verify_schedule_properties(const Schedule& s) {
    ScheduleReport rep;
    const long double D = s.delta;
    const long double logd = std::log(D);
    const long double log2d = logd * logd;
    const long double eps = s.epsilon;
    const long double gamma = s.gamma;
    int last = s.closed() ? *s.i_star : s.iterations();

    auto item = [&](const std::string& id, auto&& holds_at) {
        PropertyCheck c;
        c.id = id;
        for (int i = 1; i <= last; ++i) {
            if (!holds_at(i)) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
        }
        rep.items.push_back(c);
    };
    auto rel_eq = [](long double a, long double b) {
        long double scale = std::max(std::abs(a), std::abs(b));
        return scale == 0.0L || std::abs(a - b) <= 1e-10L * scale;
    };

    long double keep1 = s.keep.front();
    long double r1 = s.r.front();
    item("i", [&](int i) {
        return s.at(s.keep, i) >= keep1 && keep1 > std::exp(-s.K);
    });
    item("ii", [&](int i) {
        long double bound = r1 * std::pow(1.0L - s.eta * keep1, static_cast<long double>(i - 1)) *
                            std::exp(4.0L * (i - 1) / log2d);
        return s.at(s.r, i) <= bound;
    });
    item("iii", [&](int i) { return s.at(s.L, i) > 10.0L * std::pow(D, eps / 2.0L); });
    item("iv", [&](int i) { return s.at(s.T, i) > std::pow(D, eps / 2.0L); });
    item("v", [&](int i) {
        return rel_eq(s.at(s.B, i) / s.at(s.T, i), gamma - 1.0L / log2d);
    });
    item("vi", [&](int i) {
        return rel_eq(s.at(s.T, i) / s.at(s.Q, i), 10.0L / gamma * std::pow(logd, 18.0L));
    });
    item("vii", [&](int i) {
        return s.at(s.B, i) / s.at(s.Q, i) > 5.0L * std::pow(logd, 18.0L);
    });
    item("viii", [&](int i) {
        return s.at(s.Q, i) / s.at(s.X, i) > std::pow(D, (1.0L - gamma) * eps / 3.0L);
    });

    {
        PropertyCheck c;
        c.id = "rough";  // A_{i+1} <= A_i <= 2 A_{i+1}
        for (int i = 1; i < last && c.pass; ++i) {
            for (const auto* a : {&s.B, &s.L, &s.Q, &s.T, &s.X}) {
                long double cur = s.at(*a, i), nxt = s.at(*a, i + 1);
                if (!(nxt <= cur && cur <= 2.0L * nxt)) {
                    c.pass = false;
                    c.first_failure = i;
                    break;
                }
            }
        }
        rep.items.push_back(c);
    }
    {
        PropertyCheck c;
        c.id = "closure";  // i* exists and i* <= ln^{3/2} Delta
        if (!s.closed()) {
            c.pass = false;
            c.note = "schedule did not close within the iteration cap";
        } else if (static_cast<long double>(*s.i_star) > std::pow(logd, 1.5L)) {
            c.pass = false;
            c.note = "i* exceeds ln^{3/2} Delta";
        }
        rep.items.push_back(c);
    }

    rep.all_pass = true;
    for (const auto& c : rep.items) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

std::string ScheduleReport::to_json() const {
    std::ostringstream out;
    out << "{\n  \"all_pass\": " << (all_pass ? "true" : "false") << ",\n  \"items\": [\n";
    for (size_t i = 0; i < items.size(); ++i) {
        const auto& c = items[i];
        out << "    {\"item\": \"" << c.id << "\", \"pass\": " << (c.pass ? "true" : "false")
            << ", \"first_failure\": " << c.first_failure << ", \"note\": \"" << c.note << "\"}"
            << (i + 1 < items.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string schedule_csv(const Schedule& s) {
    std::ostringstream out;
    out << "i,L,T,keep,Q,X,B,r\n";
    out.precision(17);
    for (int i = 1; i <= s.iterations(); ++i) {
        out << i << "," << static_cast<double>(s.at(s.L, i)) << ","
            << static_cast<double>(s.at(s.T, i)) << "," << static_cast<double>(s.at(s.keep, i))
            << "," << static_cast<double>(s.at(s.Q, i)) << ","
            << static_cast<double>(s.at(s.X, i)) << "," << static_cast<double>(s.at(s.B, i))
            << "," << static_cast<double>(s.at(s.r, i)) << "\n";
    }
    return out.str();
}

}  // namespace sc
