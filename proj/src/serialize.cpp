#include <fockvx/serialize.hpp>

#include <stdexcept>
#include <string>

namespace fockvx
{

namespace
{

[[noreturn]] void malformed(const std::string &what)
{
    throw std::invalid_argument("malformed JSON: " + what);
}

const json &field(const json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        malformed(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

int int_field(const json &j, const char *name)
{
    const json &f = field(j, name);
    if (!f.is_number_integer()) {
        malformed(std::string("field \"") + name + "\" must be an integer");
    }
    return f.get<int>();
}

Rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    malformed("rational must be a \"num/den\" string or an integer");
}

int mode_key(const std::string &key)
{
    std::size_t used = 0;
    int mode = 0;
    try {
        mode = std::stoi(key, &used);
    } catch (const std::exception &) {
        malformed("mode key \"" + key + "\" is not an integer");
    }
    if (used != key.size()) {
        malformed("mode key \"" + key + "\" is not an integer");
    }
    return mode;
}

Matrix matrix_from_json(const json &j, const char *name)
{
    if (!j.is_array()) {
        throw config_error(std::string("basis matrix ") + name + " must be an array of rows");
    }
    Matrix m;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw config_error(std::string("basis matrix ") + name + " rows must be arrays");
        }
        auto &out = m.emplace_back();
        for (const auto &x : row) {
            out.push_back(scalar_from_json(x));
        }
    }
    return m;
}

json matrix_to_json(const Matrix &m)
{
    json rows = json::array();
    for (const auto &row : m) {
        json r = json::array();
        for (const auto &x : row) {
            r.push_back(to_json(x));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

json to_json(const Scalar &s)
{
    if (s.is_real()) {
        return rational_to_string(s.re());
    }
    return json{{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Scalar scalar_from_json(const json &j)
{
    if (j.is_object()) {
        const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
        const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        for (const auto &[key, value] : j.items()) {
            if (key != "re" && key != "im") {
                malformed("unexpected scalar field \"" + key + "\"");
            }
        }
        return Scalar(re, im);
    }
    return Scalar(rational_from_json(j));
}

json to_json(const OneParticleVector &v)
{
    json entries = json::array();
    for (const auto &[mode, value] : v.coords()) {
        entries.push_back(json::array({mode, to_json(value)}));
    }
    return json{{"modes", v.modes()}, {"entries", std::move(entries)}};
}

OneParticleVector vector_from_json(const json &j)
{
    OneParticleVector v(int_field(j, "modes"));
    const json &entries = field(j, "entries");
    if (!entries.is_array()) {
        malformed("\"entries\" must be an array");
    }
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer()) {
            malformed("vector entries must be [mode, scalar] pairs");
        }
        const int mode = e[0].get<int>();
        if (mode >= 1 && mode <= v.modes() && !v.coord(mode).is_zero()) {
            malformed("mode " + std::to_string(mode) + " listed twice");
        }
        v.set(mode, scalar_from_json(e[1]));
    }
    return v;
}

json to_json(const MultiIndex &p)
{
    json out = json::object();
    for (const auto &[mode, exp] : p.entries()) {
        out[std::to_string(mode)] = exp;
    }
    return out;
}

MultiIndex multiindex_from_json(const json &j)
{
    if (!j.is_object()) {
        malformed("multi-index must be an object of mode: exponent");
    }
    std::vector<MultiIndex::entry> entries;
    for (const auto &[key, value] : j.items()) {
        if (!value.is_number_integer()) {
            malformed("exponent for mode " + key + " must be an integer");
        }
        entries.emplace_back(mode_key(key), value.get<int>());
    }
    return MultiIndex(std::move(entries));
}

json to_json(const TuplePair &pq)
{
    return json{{"p", to_json(pq.p)}, {"q", to_json(pq.q)}};
}

TuplePair tuple_pair_from_json(const json &j)
{
    return {multiindex_from_json(field(j, "p")), multiindex_from_json(field(j, "q"))};
}

json to_json(const Cutoffs &c)
{
    return json{{"modes", c.modes}, {"order", c.order}, {"degree", c.degree}};
}

Cutoffs cutoffs_from_json(const json &j)
{
    Cutoffs c{int_field(j, "modes"), int_field(j, "order"), int_field(j, "degree")};
    c.validate();
    return c;
}

json to_json(const SchurOperator &op)
{
    json terms = json::array();
    for (const auto &t : op.terms) {
        terms.push_back(json{{"p", to_json(t.p)}, {"q", to_json(t.q)}, {"coeff", to_json(t.coeff)}});
    }
    return json{{"w", op.w}, {"cutoffs", to_json(op.cutoffs)}, {"terms", std::move(terms)}};
}

SchurOperator schur_operator_from_json(const json &j)
{
    const json &w = field(j, "w");
    if (!w.is_number_integer()) {
        malformed("\"w\" must be an integer");
    }
    SchurOperator op{w.get<long>(), cutoffs_from_json(field(j, "cutoffs")), {}};
    for (const auto &t : field(j, "terms")) {
        op.terms.push_back(
            {multiindex_from_json(field(t, "p")), multiindex_from_json(field(t, "q")), scalar_from_json(field(t, "coeff"))});
    }
    return op;
}

json to_json(const LaurentSlice &slice)
{
    json coeffs = json::object();
    for (const auto &[w, c] : slice.coeffs.coeffs()) {
        coeffs[std::to_string(w)] = to_json(c);
    }
    return json{{"coeffs", std::move(coeffs)}, {"cutoffs", to_json(slice.cutoffs)}};
}

LaurentSlice laurent_slice_from_json(const json &j)
{
    LaurentSlice slice;
    const json &coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) {
        malformed("\"coeffs\" must be an object");
    }
    for (const auto &[key, value] : coeffs.items()) {
        slice.coeffs.add_term(mode_key(key), scalar_from_json(value));
    }
    if (j.contains("cutoffs")) {
        slice.cutoffs = cutoffs_from_json(j.at("cutoffs"));
    }
    return slice;
}

json to_json(const Polynomial &poly)
{
    json terms = json::array();
    for (const auto &[p, c] : poly.terms()) {
        terms.push_back(json{{"monomial", to_json(p)}, {"coeff", to_json(c)}});
    }
    return json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json &j)
{
    Polynomial poly;
    for (const auto &t : field(j, "terms")) {
        poly.add_term(multiindex_from_json(field(t, "monomial")), scalar_from_json(field(t, "coeff")));
    }
    return poly;
}

json to_json(const BasisConfig &basis)
{
    return json{{"modes", basis.modes()}, {"F", matrix_to_json(basis.f_matrix())}, {"G", matrix_to_json(basis.g_matrix())}};
}

BasisConfig basis_from_json(const json &j)
{
    if (!j.is_object()) {
        throw config_error("basis must be a JSON object");
    }
    if (!j.contains("modes") || !j.at("modes").is_number_integer()) {
        throw config_error("basis needs an integer \"modes\" field");
    }
    const int modes = j.at("modes").get<int>();
    if (modes < 1) {
        throw config_error("basis needs at least one mode");
    }
    try {
        Matrix f = j.contains("F") ? matrix_from_json(j.at("F"), "F") : identity_matrix(modes);
        Matrix g = j.contains("G") ? matrix_from_json(j.at("G"), "G") : identity_matrix(modes);
        if (static_cast<int>(f.size()) != modes) {
            throw config_error("F has " + std::to_string(f.size()) + " rows, expected " + std::to_string(modes));
        }
        return BasisConfig(std::move(f), std::move(g));
    } catch (const std::invalid_argument &e) {
        throw config_error(std::string("basis entry: ") + e.what());
    }
}

} // namespace fockvx
