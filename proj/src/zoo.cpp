#include "omega/zoo.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace omega::zoo {

DetOmega gen_ln(int n) {
    if (n <= 0) throw PreconditionError("L_n needs n >= 1");
    std::vector<std::string> letters;
    for (int i = 0; i <= n; ++i) letters.push_back(std::to_string(i));
    const State sink = n + 1;
    DetOmega d(DetTS(Alphabet(letters), n + 2, 0));
    for (State s = 0; s <= sink; ++s)
        for (Letter a = 0; a <= n; ++a) d.ts.set(s, a, sink);
    for (int i = 0; i <= n; ++i) {
        d.ts.set(i, i, i);
        d.set_acc(i, i);
        if (i < n) {
            d.ts.set(i, i + 1, i + 1);
            d.set_acc(i, i + 1);
        }
    }
    // For n = 1 the wrap-around would make every transition live.
    if (n >= 2) {
        d.ts.set(n, 0, 0);
        d.set_acc(n, 0);
    }
    return d;
}

DetOmega gen_fig1() {
    enum { Eps, A, B, AA, AB };
    DetOmega d(DetTS(Alphabet({"a", "b"}), 5, Eps));
    const Letter a = 0, b = 1;
    d.ts.set(Eps, a, A);
    d.ts.set(Eps, b, B);
    d.ts.set(A, a, AA);
    d.ts.set(A, b, AB);
    d.ts.set(B, a, B);
    d.ts.set(B, b, B);
    d.ts.set(AA, a, AA);
    d.ts.set(AA, b, B);
    d.ts.set(AB, a, B);
    d.ts.set(AB, b, AB);
    d.set_acc(AA, a);
    d.set_acc(AB, b);
    return d;
}

Fdfa gen_fig5_fdfa() {
    Alphabet sigma({"1", "2", "3", "4"});
    Fdfa f;
    f.leading = DetTS(sigma, 1, 0);
    f.flavor = Flavor::Limit;
    // State i tracks maximum letter i+1 seen so far; ε shares state 0.
    Dfa p(DetTS(sigma, 4, 0));
    for (State s = 0; s < 4; ++s)
        for (Letter a = 0; a < 4; ++a) p.ts.set(s, a, std::max(s, a));
    p.finals[1] = p.finals[3] = true;
    f.progress.push_back(p);
    f.labels.emplace_back(Word{});
    return f;
}

DetOmega gen_sigma_star_aa() {
    DetOmega d(DetTS(Alphabet({"a", "b"}), 2, 0));
    d.ts.set(0, 0, 1);
    d.ts.set(0, 1, 0);
    d.ts.set(1, 0, 1);
    d.ts.set(1, 1, 0);
    d.set_acc(1, 0);
    return d;
}

DetOmega gen_random_dba(std::uint64_t seed, int states, int alphabet_size, double acc_density) {
    if (states < 1 || alphabet_size < 1 || alphabet_size > 26)
        throw PreconditionError("random DBA needs >= 1 state and 1..26 letters");
    std::vector<std::string> letters;
    for (int i = 0; i < alphabet_size; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
    std::mt19937_64 rng(seed);
    DetOmega d(DetTS(Alphabet(letters), states, 0));
    for (State s = 0; s < states; ++s)
        for (Letter a = 0; a < alphabet_size; ++a) {
            d.ts.set(s, a, static_cast<State>(rng() % static_cast<std::uint64_t>(states)));
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            d.set_acc(s, a, x < acc_density);
        }
    return d;
}

}  // namespace omega::zoo
