#include "series/series_io.hpp"

#include <stdexcept>

namespace lamext {

namespace {

std::string field_after(const std::string& line, const std::string& key) {
    auto pos = line.find(key + "=");
    if (pos == std::string::npos)
        throw std::invalid_argument("series header missing field: " + key);
    pos += key.size() + 1;
    auto end = line.find(' ', pos);
    if (end == std::string::npos) end = line.size();
    return line.substr(pos, end - pos);
}

std::string next_data_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        return line.substr(a, b - a + 1);
    }
    throw std::invalid_argument("unexpected end of series file");
}

}  // namespace

SeriesHeader parse_series_header(const std::string& line) {
    SeriesHeader h;
    h.var = var_from_name(field_after(line, "var"));
    h.prefac = rat_from_string(field_after(line, "prefactor"));
    h.order = std::stoi(field_after(line, "order"));
    h.ring = field_after(line, "ring");
    if (h.order < 1) throw std::invalid_argument("series order must be >= 1");
    return h;
}

SeriesQ read_series_q(std::istream& is) {
    auto h = parse_series_header(next_data_line(is));
    if (h.ring != "Q") throw std::invalid_argument("expected ring=Q, got " + h.ring);
    std::vector<Rat> c;
    c.reserve((size_t)h.order);
    for (int k = 0; k < h.order; ++k) c.push_back(rat_from_string(next_data_line(is)));
    return SeriesQ(h.var, std::move(c), NoCtx{}, h.prefac);
}

SeriesFp read_series_fp(std::istream& is) {
    auto h = parse_series_header(next_data_line(is));
    if (h.ring.rfind("Fp:", 0) != 0)
        throw std::invalid_argument("expected ring=Fp:<p>, got " + h.ring);
    std::uint64_t p = std::stoull(h.ring.substr(3));
    if (!is_prime_u64(p)) throw std::invalid_argument("ring modulus is not prime");
    std::vector<Fp> c;
    c.reserve((size_t)h.order);
    for (int k = 0; k < h.order; ++k) c.push_back(Fp{std::stoull(next_data_line(is)), p});
    return SeriesFp(h.var, std::move(c), FpCtx{p}, h.prefac);
}

SeriesM read_series_m(std::istream& is) {
    auto h = parse_series_header(next_data_line(is));
    if (h.ring != "Qm") throw std::invalid_argument("expected ring=Qm, got " + h.ring);
    std::vector<ParamPoly> c;
    c.reserve((size_t)h.order);
    for (int k = 0; k < h.order; ++k) {
        std::istringstream ls(next_data_line(is));
        std::vector<Rat> poly;
        std::string tok;
        while (ls >> tok) poly.push_back(rat_from_string(tok));
        c.emplace_back(std::move(poly));
    }
    return SeriesM(h.var, std::move(c), NoCtx{}, h.prefac);
}

SeriesQuad read_series_quad(std::istream& is) {
    auto h = parse_series_header(next_data_line(is));
    if (h.ring.rfind("Qsqrt:", 0) != 0)
        throw std::invalid_argument("expected ring=Qsqrt:<d>, got " + h.ring);
    long d = std::stol(h.ring.substr(6));
    std::vector<QuadExt> c;
    c.reserve((size_t)h.order);
    for (int k = 0; k < h.order; ++k) {
        // "a + b sqrt d"
        std::istringstream ls(next_data_line(is));
        std::string a, plus, b, kw;
        long dd;
        if (!(ls >> a >> plus >> b >> kw >> dd) || plus != "+" || kw != "sqrt")
            throw std::invalid_argument("bad Qsqrt coefficient line");
        if (dd != d) throw std::invalid_argument("sqrt base mismatch in coefficient line");
        c.push_back(QuadExt{rat_from_string(a), rat_from_string(b), d});
    }
    return SeriesQuad(h.var, std::move(c), QuadCtx{d}, h.prefac);
}

SeriesQ read_series_any_as_q(std::istream& is) {
    std::string header = next_data_line(is);
    auto h = parse_series_header(header);
    std::istringstream replay;
    std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    replay.str(header + "\n" + rest);
    if (h.ring == "Q") return read_series_q(replay);
    if (h.ring == "Qm") {
        auto m = read_series_m(replay);
        std::vector<Rat> c;
        for (const auto& p : m.c) {
            if (!p.is_constant())
                throw std::invalid_argument("Qm series has genuine M dependence; not convertible to Q");
            c.push_back(p.coeff(0));
        }
        return SeriesQ(m.var, std::move(c), NoCtx{}, m.prefac);
    }
    if (h.ring.rfind("Qsqrt:", 0) == 0) return descend_to_rational(read_series_quad(replay));
    throw std::invalid_argument("cannot interpret ring " + h.ring + " as Q");
}

}  // namespace lamext
