#include "ecom/catalog.hpp"

#include <sstream>

namespace ecom {

namespace {

long power_of(long base, int exp) {
    long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::string quaternion_presentation(int n) {
    std::ostringstream os;
    os << "< x, y | y^" << 2 * n << " = 1, x^2 = y^" << n << ", x*y*x^-1 = y^-1 >";
    return os.str();
}

std::string dihedral_type_presentation(int m, int n) {
    std::ostringstream os;
    os << "< x, y | x^" << power_of(2, m) << " = 1, y^" << 2 * n + 1
       << " = 1, x*y*x^-1 = y^-1 >";
    return os.str();
}

std::string p_prime_presentation(int m) {
    std::ostringstream os;
    os << "< x, y, z | x^2 = (x*y)^2 = y^2, z*x*z^-1 = y, z*y*z^-1 = x*y, z^" << power_of(3, m)
       << " = 1 >";
    return os.str();
}

const char* p48_presentation = "< x, y | x^2 = (x*y)^3 = y^4, x^4 = 1 >";
const char* p120_presentation = "< x, y | x^2 = (x*y)^3 = y^5, x^4 = 1 >";

FiniteGroup cyclic(int n) {
    std::vector<int> mul(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    return FiniteGroup::from_flat_table(n, std::move(mul));
}

}  // namespace

FiniteGroup make_quaternion(int n, int order_limit) {
    if (n < 2) fail(errc::bad_input, "generalized quaternion needs n >= 2");
    const int order = 4 * n;
    if (order > order_limit)
        fail(errc::order_limit, "order " + std::to_string(order) + " exceeds limit");
    const int m = 2 * n;  // order of y
    auto id = [&](int i, int a) { return i * m + a; };
    std::vector<int> mul(order * order);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < m; ++a)
            for (int j = 0; j < 2; ++j)
                for (int b = 0; b < m; ++b) {
                    int lhs = id(i, a), rhs = id(j, b), res;
                    if (j == 0) {
                        res = id(i, (a + b) % m);
                    } else if (i == 0) {
                        // y^a * x y^b = x y^(b-a)
                        res = id(1, ((b - a) % m + m) % m);
                    } else {
                        // x y^a * x y^b = x^2 y^(b-a) = y^(n+b-a)
                        res = id(0, ((n + b - a) % m + m) % m);
                    }
                    mul[lhs * order + rhs] = res;
                }
    return FiniteGroup::from_flat_table(order, std::move(mul));
}

FiniteGroup make_binary_octahedral() {
    return todd_coxeter(parse_presentation(p48_presentation)).group;
}

FiniteGroup make_binary_icosahedral() {
    return todd_coxeter(parse_presentation(p120_presentation)).group;
}

FiniteGroup make_dihedral_type(int m, int n, int order_limit) {
    if (m < 2 || n < 1) fail(errc::bad_input, "dihedral type needs m >= 2 and n >= 1");
    const long order = power_of(2, m) * (2 * n + 1);
    if (order > order_limit)
        fail(errc::order_limit, "order " + std::to_string(order) + " exceeds limit");
    const int tm = (int)power_of(2, m), tk = 2 * n + 1, no = (int)order;
    auto id = [&](int i, int a) { return i * tk + a; };
    std::vector<int> mul((size_t)no * no);
    for (int i = 0; i < tm; ++i)
        for (int a = 0; a < tk; ++a)
            for (int j = 0; j < tm; ++j)
                for (int b = 0; b < tk; ++b) {
                    // x^i y^a * x^j y^b = x^(i+j) y^(a*(-1)^j + b)
                    int aa = (j % 2 == 0) ? a : (tk - a) % tk;
                    mul[(size_t)id(i, a) * no + id(j, b)] = id((i + j) % tm, (aa + b) % tk);
                }
    return FiniteGroup::from_flat_table(no, std::move(mul));
}

FiniteGroup make_p_prime(int m, int order_limit) {
    if (m < 1) fail(errc::bad_input, "p-prime family needs m >= 1");
    const long order = 8 * power_of(3, m);
    if (order > order_limit)
        fail(errc::order_limit, "order " + std::to_string(order) + " exceeds limit");
    return todd_coxeter(parse_presentation(p_prime_presentation(m))).group;
}

FiniteGroup make_small(const std::string& name, int order_limit) {
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!isdigit((unsigned char)name[i])) fail(errc::unknown_name, "unknown group name '" + name + "'");
            n = n * 10 + (name[i] - '0');
        }
        if (n < 1) fail(errc::unknown_name, "unknown group name '" + name + "'");
        if (n > order_limit) fail(errc::order_limit, "order " + std::to_string(n) + " exceeds limit");
        return cyclic(n);
    }
    if (name == "V4") return direct_product(cyclic(2), cyclic(2));
    if (name == "E8") return direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
    if (name == "S3") return FiniteGroup::from_permutations({parse_cycles("(0 1)"), parse_cycles("(0 1 2)")});
    if (name == "S4")
        return FiniteGroup::from_permutations({parse_cycles("(0 1)"), parse_cycles("(0 1 2 3)")});
    if (name == "A4")
        return FiniteGroup::from_permutations({parse_cycles("(0 1 2)"), parse_cycles("(1 2 3)")});
    fail(errc::unknown_name, "unknown group name '" + name + "'");
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (int n = 2; n <= 6; ++n)
        out.push_back(CatalogEntry{"Q," + std::to_string(n),
                                   {n},
                                   4 * n,
                                   2,
                                   (long)n * n - 1,
                                   "n^2-1",
                                   quaternion_presentation(n)});
    out.push_back(CatalogEntry{"P48", {}, 48, 2, 167, "", p48_presentation});
    out.push_back(CatalogEntry{"P120", {}, 120, 2, 1079, "", p120_presentation});
    for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}})
        out.push_back(CatalogEntry{"D," + std::to_string(m) + "," + std::to_string(n),
                                   {m, n},
                                   (int)(power_of(2, m) * (2 * n + 1)),
                                   (int)power_of(2, m - 1),
                                   (long)(2 * n + 1) * (2 * n + 1) - 1,
                                   "(2n+1)^2-1",
                                   dihedral_type_presentation(m, n)});
    out.push_back(CatalogEntry{"Pprime,1", {1}, 24, 2, 39, "", p_prime_presentation(1)});
    // Small test stock. Abelian groups are contractible; the nonabelian
    // counts were frozen from the exhaustive-subgroup oracle.
    out.push_back(CatalogEntry{"Z6", {}, 6, 6, 0, "", "< x | x^6 >"});
    out.push_back(CatalogEntry{"V4", {}, 4, 4, 0, "", ""});
    out.push_back(CatalogEntry{"E8", {}, 8, 8, 0, "", ""});
    out.push_back(CatalogEntry{"S3", {}, 6, 1, 8, "", ""});
    out.push_back(CatalogEntry{"A4", {}, 12, 1, 30, "", ""});
    out.push_back(CatalogEntry{"S4", {}, 24, 1, std::nullopt, "", ""});
    return out;
}

FiniteGroup make_catalog(const std::string& spec, int order_limit, int coset_limit) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    parts.push_back(cur);
    auto int_arg = [&](size_t i, int fallback) {
        if (parts.size() <= i) return fallback;
        try {
            return std::stoi(parts[i]);
        } catch (...) {
            fail(errc::bad_input, "bad catalog parameter '" + parts[i] + "'");
        }
    };

    const std::string& name = parts[0];
    if (name == "Q") {
        if (parts.size() != 2) fail(errc::bad_input, "usage: Q,<n>");
        return make_quaternion(int_arg(1, 0), order_limit);
    }
    if (name == "D") {
        if (parts.size() != 3) fail(errc::bad_input, "usage: D,<m>,<n>");
        return make_dihedral_type(int_arg(1, 0), int_arg(2, 0), order_limit);
    }
    if (name == "P48") return todd_coxeter(parse_presentation(p48_presentation), coset_limit).group;
    if (name == "P120")
        return todd_coxeter(parse_presentation(p120_presentation), coset_limit).group;
    if (name == "Pprime" || name == "P'") {
        int m = int_arg(1, 1);
        if (8 * power_of(3, m) > order_limit)
            fail(errc::order_limit, "order exceeds limit");
        return todd_coxeter(parse_presentation(p_prime_presentation(m)), coset_limit).group;
    }
    if (parts.size() != 1) fail(errc::bad_input, "unexpected parameters for '" + name + "'");
    return make_small(name, order_limit);
}

}  // namespace ecom
