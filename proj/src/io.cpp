#include "zerosum/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace zerosum {

namespace {

constexpr std::size_t kValuesPerLine = 32;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        const std::size_t begin = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > begin) out.push_back(text.substr(begin, i - begin));
    }
    return out;
}

i64 parse_decimal(std::string_view tok, bool allow_sign, const std::string& what) {
    std::string_view digits = tok;
    bool negative = false;
    if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw InputError("malformed " + what + ": '" + std::string(tok) + "'");
    i64 value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw InputError("malformed " + what + ": '" + std::string(tok) + "'");
    return negative ? -value : value;
}

// Parses "<key>=<decimal>" exactly.
i64 header_field(std::string_view tok, std::string_view key) {
    if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
        throw InputError("header field '" + std::string(key) + "=' expected, got '" + std::string(tok) + "'");
    return parse_decimal(tok.substr(key.size() + 1), false, "header field " + std::string(key));
}

}  // namespace

void write_sequence(std::ostream& os, const SignSeq& seq, BodyEncoding encoding) {
    const Alphabet& l = seq.letters();
    os << "# zerosum v1 r=" << l.r() << " s=" << l.s() << " n=" << seq.size() << '\n';
    if (seq.empty()) return;
    if (encoding == BodyEncoding::Bits) {
        os << "b:";
        for (bool b : seq.selectors()) os << (b ? '1' : '0');
        os << '\n';
        return;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        os << seq.value(i);
        os << ((i + 1) % kValuesPerLine == 0 || i + 1 == seq.size() ? '\n' : ' ');
    }
}

std::string format_sequence(const SignSeq& seq, BodyEncoding encoding) {
    std::ostringstream os;
    write_sequence(os, seq, encoding);
    return os.str();
}

SignSeq parse_sequence(std::string_view text) {
    const std::size_t eol = text.find('\n');
    std::string_view header = text.substr(0, eol);
    if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
    const std::string_view body = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    constexpr std::string_view kMagic = "# zerosum v1 ";
    if (header.substr(0, kMagic.size()) != kMagic)
        throw InputError("first line must start with '# zerosum v1 '");
    const auto fields = split_tokens(header.substr(kMagic.size()));
    if (fields.size() != 3) throw InputError("header must be exactly '# zerosum v1 r=<r> s=<s> n=<n>'");
    const i64 r = header_field(fields[0], "r");
    const i64 s = header_field(fields[1], "s");
    const i64 n = header_field(fields[2], "n");
    if (header != std::string(kMagic) + "r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n))
        throw InputError("header must be exactly '# zerosum v1 r=<r> s=<s> n=<n>'");

    Alphabet letters = [&] {
        try {
            return Alphabet(r, s);
        } catch (const PreconditionError& e) {
            throw InputError(std::string("invalid header letters: ") + e.what());
        }
    }();

    const auto tokens = split_tokens(body);
    if (!tokens.empty() && tokens.front().substr(0, 2) == "b:") {
        if (tokens.size() != 1) throw InputError("a bitstring body must be a single 'b:<bits>' token");
        const std::string_view bits = tokens.front().substr(2);
        if (static_cast<i64>(bits.size()) != n)
            throw InputError("bitstring has length " + std::to_string(bits.size()) + ", header says n=" +
                             std::to_string(n));
        std::vector<bool> sel(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1') throw InputError("bitstring may contain only 0 and 1");
            sel[i] = bits[i] == '1';
        }
        return SignSeq(letters, std::move(sel));
    }
    if (static_cast<i64>(tokens.size()) != n)
        throw InputError("body has " + std::to_string(tokens.size()) + " values, header says n=" + std::to_string(n));
    std::vector<i64> values;
    values.reserve(tokens.size());
    for (auto tok : tokens) values.push_back(parse_decimal(tok, true, "value"));
    return SignSeq::from_values(letters, values);
}

SignSeq read_sequence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

void write_sequence_file(const std::string& path, const SignSeq& seq, BodyEncoding encoding) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    write_sequence(out, seq, encoding);
    if (!out) throw InputError("write failed for " + path);
}

}  // namespace zerosum
