#include "rankeq/io.hpp"

#include <fstream>
#include <sstream>

namespace rankeq {

namespace {

// Reads the next non-empty, non-comment line.
std::string next_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        return line;
    }
    throw ParseError("unexpected end of input");
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> t;
    std::string w;
    while (ss >> w) t.push_back(w);
    return t;
}

std::uint64_t to_u64(const std::string& s) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw ParseError("bad integer: " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad integer: " + s);
    }
}

void write_field_header(std::ostream& os, const Fq& k) {
    os << "field " << k.p() << ' ' << k.e();
    if (!k.is_prime_field())
        for (auto c : k.modulus()) os << ' ' << c;
    os << '\n';
}

FqPtr read_field_header(std::istream& is) {
    auto t = tokens(next_line(is));
    if (t.size() < 3 || t[0] != "field")
        throw ParseError("expected field header");
    std::uint64_t p = to_u64(t[1]), e = to_u64(t[2]);
    if (e == 1) {
        if (t.size() != 3) throw ParseError("prime field takes no modulus");
        return make_field(p, 1);
    }
    if (t.size() != 3 + e + 1)
        throw ParseError("field modulus has wrong length");
    std::vector<std::uint64_t> mod;
    for (std::size_t i = 3; i < t.size(); ++i) mod.push_back(to_u64(t[i]));
    return make_field(p, e, mod);
}

void write_block(std::ostream& os, const MatFq& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
}

MatFq read_block(std::istream& is, const FqPtr& field, int rows, int cols) {
    MatFq m(field, rows, cols);
    for (int i = 0; i < rows; ++i) {
        auto t = tokens(next_line(is));
        if (static_cast<int>(t.size()) != cols)
            throw ParseError("matrix row has wrong length");
        for (int j = 0; j < cols; ++j) {
            std::uint64_t v = to_u64(t[j]);
            if (v >= field->q()) throw ParseError("element code out of range");
            m.at(i, j) = v;
        }
    }
    return m;
}

void expect_magic(std::istream& is, const std::string& magic) {
    auto t = tokens(next_line(is));
    if (t.size() != 2 || t[0] != magic || t[1] != "1")
        throw ParseError("expected header '" + magic + " 1'");
}

std::vector<int> read_dims(std::istream& is, std::size_t count) {
    auto t = tokens(next_line(is));
    if (t.size() != count + 1 || t[0] != "dims")
        throw ParseError("expected dims line");
    std::vector<int> d;
    for (std::size_t i = 1; i < t.size(); ++i)
        d.push_back(static_cast<int>(to_u64(t[i])));
    return d;
}

}  // namespace

void write_mcode(std::ostream& os, const MatrixCode& c) {
    os << "MCODE 1\n";
    write_field_header(os, *c.field());
    os << "dims " << c.m() << ' ' << c.n() << ' ' << c.dim() << '\n';
    for (int i = 0; i < c.dim(); ++i) {
        write_block(os, c.basis()[i]);
        if (i + 1 < c.dim()) os << '\n';
    }
}

MatrixCode read_mcode(std::istream& is) {
    expect_magic(is, "MCODE");
    FqPtr field = read_field_header(is);
    auto d = read_dims(is, 3);
    std::vector<MatFq> gens;
    for (int i = 0; i < d[2]; ++i)
        gens.push_back(read_block(is, field, d[0], d[1]));
    MatrixCode c(field, d[0], d[1], gens);
    if (c.dim() != d[2]) throw ParseError("dependent basis in MCODE file");
    return c;
}

void write_vcode(std::ostream& os, const VectorCode& v) {
    os << "VCODE 1\n";
    write_field_header(os, *v.ext_field());
    os << "dims " << v.k() << ' ' << v.n() << '\n';
    write_block(os, v.generator());
}

VectorCode read_vcode(std::istream& is) {
    expect_magic(is, "VCODE");
    FqPtr ext = read_field_header(is);
    auto d = read_dims(is, 2);
    return VectorCode(ext, read_block(is, ext, d[0], d[1]));
}

void write_gmat(std::ostream& os, const MatFq& g) {
    os << "GMAT 1\n";
    write_field_header(os, *g.field());
    os << "dims " << g.rows() << ' ' << g.cols() << '\n';
    write_block(os, g);
}

MatFq read_gmat(std::istream& is) {
    expect_magic(is, "GMAT");
    FqPtr field = read_field_header(is);
    auto d = read_dims(is, 2);
    return read_block(is, field, d[0], d[1]);
}

void write_witness(std::ostream& os, const FqPtr& field, const Witness& w) {
    os << "MWIT 1\n";
    os << "# convention: P * C * Q = D\n";
    write_field_header(os, *field);
    if (w.left) {
        os << "left " << w.left->rows() << '\n';
        write_block(os, *w.left);
    }
    if (w.right) {
        os << "right " << w.right->rows() << '\n';
        write_block(os, *w.right);
    }
}

std::pair<FqPtr, Witness> read_witness(std::istream& is) {
    expect_magic(is, "MWIT");
    FqPtr field = read_field_header(is);
    Witness w;
    std::string line;
    while (true) {
        std::streampos pos = is.tellg();
        try {
            line = next_line(is);
        } catch (const ParseError&) {
            break;
        }
        auto t = tokens(line);
        if (t.size() != 2 || (t[0] != "left" && t[0] != "right")) {
            is.seekg(pos);
            break;
        }
        int n = static_cast<int>(to_u64(t[1]));
        MatFq m = read_block(is, field, n, n);
        if (t[0] == "left") {
            if (w.left) throw ParseError("duplicate left section");
            w.left = m;
        } else {
            if (w.right) throw ParseError("duplicate right section");
            w.right = m;
        }
    }
    return {field, w};
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    // Plain runtime_error: an unreadable file is an IO failure, not a
    // malformed instance.
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

}  // namespace

MatrixCode load_mcode(const std::string& path) {
    auto f = open_in(path);
    return read_mcode(f);
}
void save_mcode(const std::string& path, const MatrixCode& c) {
    auto f = open_out(path);
    write_mcode(f, c);
}
MatFq load_gmat(const std::string& path) {
    auto f = open_in(path);
    return read_gmat(f);
}
void save_gmat(const std::string& path, const MatFq& g) {
    auto f = open_out(path);
    write_gmat(f, g);
}
std::pair<FqPtr, Witness> load_witness(const std::string& path) {
    auto f = open_in(path);
    return read_witness(f);
}
void save_witness(const std::string& path, const FqPtr& field,
                  const Witness& w) {
    auto f = open_out(path);
    write_witness(f, field, w);
}
VectorCode load_vcode(const std::string& path) {
    auto f = open_in(path);
    return read_vcode(f);
}
void save_vcode(const std::string& path, const VectorCode& v) {
    auto f = open_out(path);
    write_vcode(f, v);
}

}  // namespace rankeq
