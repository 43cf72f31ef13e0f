#include <istream>
#include <ostream>
#include <sstream>

#include "grslab/bbcrs.hpp"

namespace grslab {

namespace {

void write_header(std::ostream& os, const std::string& tag, const BbcrsParams& p) {
    os << tag << " v1 q=" << p.q << " n=" << p.n << " k=" << p.k << " z=" << p.z
       << " m=" << p.m.num() << "/" << p.m.den() << "\n";
}

std::string next_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw FormatError("unexpected end of file");
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw FormatError("trailing characters in integer '" + s + "'");
        return v;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        throw FormatError("bad integer '" + s + "'");
    }
}

BbcrsParams parse_header(const std::string& line, const std::string& tag) {
    std::istringstream ss(line);
    std::string word, version;
    ss >> word >> version;
    if (word != tag || version != "v1") throw FormatError("bad header, expected '" + tag + " v1'");
    BbcrsParams p;
    bool have_q = false, have_n = false, have_k = false, have_m = false;
    while (ss >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) throw FormatError("bad header field '" + word + "'");
        std::string key = word.substr(0, eq), val = word.substr(eq + 1);
        if (key == "q") {
            p.q = static_cast<std::uint32_t>(parse_int(val));
            have_q = true;
        } else if (key == "n") {
            p.n = static_cast<std::size_t>(parse_int(val));
            have_n = true;
        } else if (key == "k") {
            p.k = static_cast<std::size_t>(parse_int(val));
            have_k = true;
        } else if (key == "z") {
            p.z = static_cast<std::size_t>(parse_int(val));
        } else if (key == "m") {
            auto slash = val.find('/');
            if (slash == std::string::npos) throw FormatError("m must be num/den");
            p.m = Rational(parse_int(val.substr(0, slash)), parse_int(val.substr(slash + 1)));
            have_m = true;
        } else {
            throw FormatError("unknown header field '" + key + "'");
        }
    }
    if (!(have_q && have_n && have_k && have_m)) throw FormatError("incomplete header");
    try {
        p.validate();
    } catch (const ParameterError& e) {
        throw FormatError(std::string("invalid parameter in header: ") + e.what());
    }
    return p;
}

void write_fe_line(std::ostream& os, const std::vector<Fe>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
}

std::vector<Fe> read_fe_line(std::istream& is, std::size_t count, const PrimeField& f) {
    std::istringstream ss(next_line(is));
    std::vector<Fe> out;
    std::string tok;
    while (ss >> tok) {
        std::int64_t v = parse_int(tok);
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.q())
            throw FormatError("field element out of range: " + tok);
        out.push_back(static_cast<Fe>(v));
    }
    if (out.size() != count)
        throw FormatError("expected " + std::to_string(count) + " values, got " +
                          std::to_string(out.size()));
    return out;
}

void expect_section(std::istream& is, const std::string& name) {
    std::string line = next_line(is);
    if (line != name) throw FormatError("expected section '" + name + "', got '" + line + "'");
}

void write_sparse(std::ostream& os, const std::string& name, const MatrixFq& m) {
    os << name << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) os << r << " " << c << " " << m.at(r, c) << "\n";
    os << "END\n";
}

MatrixFq read_sparse(std::istream& is, const std::string& name, const PrimeField& f,
                     std::size_t rows, std::size_t cols) {
    expect_section(is, name);
    MatrixFq m(f, rows, cols);
    for (;;) {
        std::string line = next_line(is);
        if (line == "END") break;
        std::istringstream ss(line);
        std::string a, b, c;
        if (!(ss >> a >> b >> c)) throw FormatError("bad triple in section " + name);
        std::string extra;
        if (ss >> extra) throw FormatError("trailing data in section " + name);
        std::int64_t r = parse_int(a), col = parse_int(b), v = parse_int(c);
        if (r < 0 || static_cast<std::size_t>(r) >= rows || col < 0 ||
            static_cast<std::size_t>(col) >= cols)
            throw FormatError("triple index out of range in section " + name);
        if (v <= 0 || static_cast<std::uint64_t>(v) >= f.q())
            throw FormatError("triple value out of range in section " + name);
        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = static_cast<Fe>(v);
    }
    return m;
}

}  // namespace

void write_secret_key(std::ostream& os, const BbcrsSecretKey& sk) {
    write_header(os, "BBCRS", sk.params);
    os << "GSEC-X\n";
    write_fe_line(os, sk.gsec.support);
    os << "GSEC-Y\n";
    write_fe_line(os, sk.gsec.multiplier);
    write_sparse(os, "S", sk.s);
    write_sparse(os, "T", sk.t);
    os << "ALPHA\n";
    write_fe_line(os, sk.alpha);
    os << "BETA\n";
    write_fe_line(os, sk.beta);
}

BbcrsSecretKey read_secret_key(std::istream& is) {
    BbcrsParams p = parse_header(next_line(is), "BBCRS");
    PrimeField f = p.field();
    expect_section(is, "GSEC-X");
    std::vector<Fe> x = read_fe_line(is, p.n, f);
    expect_section(is, "GSEC-Y");
    std::vector<Fe> y = read_fe_line(is, p.n, f);
    GrsCode gsec{f, std::move(x), std::move(y), p.k};
    try {
        gsec.validate();
    } catch (const ParameterError& e) {
        throw FormatError(std::string("invalid secret GRS data: ") + e.what());
    }
    MatrixFq s = read_sparse(is, "S", f, p.k, p.k);
    MatrixFq t = read_sparse(is, "T", f, p.n, p.n);
    expect_section(is, "ALPHA");
    std::vector<Fe> alpha = read_fe_line(is, p.n, f);
    expect_section(is, "BETA");
    std::vector<Fe> beta = read_fe_line(is, p.n, f);

    std::vector<std::size_t> j1, j2;
    for (std::size_t i = 0; i < p.n; ++i) {
        std::size_t w = t.row_weight(i);
        if (w == 1)
            j1.push_back(i);
        else if (w == 2)
            j2.push_back(i);
        else
            throw FormatError("T row " + std::to_string(i) + " has weight " + std::to_string(w));
    }
    BbcrsSecretKey sk{p, std::move(gsec), std::move(s), std::move(t),
                      std::move(alpha), std::move(beta), std::move(j1), std::move(j2)};
    if (!sk.s.inverse()) throw FormatError("S is singular");
    if (!sk.q_matrix().inverse()) throw FormatError("T + R is singular");
    return sk;
}

void write_public_key(std::ostream& os, const BbcrsPublicKey& pk) {
    write_header(os, "BBCRS", pk.params);
    os << "GPUB\n";
    for (std::size_t r = 0; r < pk.gpub.rows(); ++r) write_fe_line(os, pk.gpub.row_vec(r));
}

BbcrsPublicKey read_public_key(std::istream& is) {
    BbcrsParams p = parse_header(next_line(is), "BBCRS");
    PrimeField f = p.field();
    expect_section(is, "GPUB");
    MatrixFq g(f, p.k, p.n);
    for (std::size_t r = 0; r < p.k; ++r) {
        std::vector<Fe> row = read_fe_line(is, p.n, f);
        for (std::size_t c = 0; c < p.n; ++c) g.at(r, c) = row[c];
    }
    if (g.rank() != p.k) throw FormatError("GPUB is not full rank");
    return BbcrsPublicKey{p, std::move(g)};
}

void write_vector_file(std::ostream& os, const std::string& kind, const BbcrsParams& p,
                       const std::vector<Fe>& v) {
    write_header(os, "BBCRS-" + kind, p);
    write_fe_line(os, v);
}

std::pair<BbcrsParams, std::vector<Fe>> read_vector_file(std::istream& is,
                                                         const std::string& kind) {
    BbcrsParams p = parse_header(next_line(is), "BBCRS-" + kind);
    std::size_t count = kind == "MSG" ? p.k : p.n;
    std::vector<Fe> v = read_fe_line(is, count, p.field());
    return {p, std::move(v)};
}

}  // namespace grslab
