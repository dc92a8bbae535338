#include "core/codefile.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace udc {

namespace {

CodeSystem parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("codes"))
        fail(errc::parse, "JSON record needs fields 'd' and 'codes'");
    if (!doc["d"].is_number_integer()) fail(errc::parse, "field 'd' must be an integer");
    if (!doc["codes"].is_array()) fail(errc::parse, "field 'codes' must be a list of lists");
    CodeSystem sys;
    sys.d = doc["d"].get<int>();
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(errc::parse, "field 'name' must be a string");
        sys.name = doc["name"].get<std::string>();
    }
    for (const auto& code : doc["codes"]) {
        if (!code.is_array()) fail(errc::parse, "field 'codes' must be a list of lists");
        std::vector<Codeword> words;
        for (const auto& v : code) {
            if (!v.is_number_unsigned() && !v.is_number_integer())
                fail(errc::parse, "codewords must be nonnegative integers");
            long long x = v.get<long long>();
            if (x < 0) fail(errc::range, "codeword " + std::to_string(x) + " is negative");
            words.push_back(static_cast<Codeword>(x));
        }
        sys.codes.push_back(std::move(words));
    }
    return make_system(sys.d, std::move(sys.codes), std::move(sys.name));
}

CodeSystem parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int d = -1;
    std::string name;
    std::vector<std::vector<Codeword>> codes;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&](int field = -1) {
            std::string pos = "line " + std::to_string(lineno);
            if (field >= 0) pos += ", field " + std::to_string(field + 1);
            return pos;
        };
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "name") {
            std::getline(ls, name);
            name.erase(0, name.find_first_not_of(" \t"));
        } else if (key == "d") {
            if (!(ls >> d) || d < 1) fail(errc::parse, "expected a positive dimension (" + where(1) + ")");
        } else if (key == "code") {
            if (d < 0) fail(errc::parse, "'d' must precede 'code' lines (" + where() + ")");
            std::vector<Codeword> words;
            std::string tok;
            int field = 0;
            while (ls >> tok) {
                ++field;
                unsigned long long v = 0;
                auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc{} || p != tok.data() + tok.size())
                    fail(errc::parse, "'" + tok + "' is not a codeword value (" + where(field) + ")");
                if (d < 64 && v >= (1ULL << d))
                    fail(errc::range, "codeword " + tok + " does not fit in dimension " + std::to_string(d) +
                                          " (" + where(field) + ")");
                for (Codeword seen : words)
                    if (seen == v) fail(errc::duplicate, "duplicate codeword " + tok + " (" + where(field) + ")");
                words.push_back(v);
            }
            if (words.empty()) fail(errc::parse, "empty 'code' line (" + where() + ")");
            codes.push_back(std::move(words));
        } else {
            fail(errc::parse, "unknown directive '" + key + "' (" + where() + ")");
        }
    }
    if (d < 0) fail(errc::parse, "missing 'd' line");
    if (codes.empty()) fail(errc::parse, "no 'code' lines");
    return make_system(d, std::move(codes), std::move(name));
}

} // namespace

CodeSystem parse_code_file(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(errc::parse, "empty code file");
    if (text[first] == '{') return parse_json(text);
    return parse_text(text);
}

std::string serialize_code_system(const CodeSystem& sys) {
    std::ostringstream out;
    if (!sys.name.empty()) out << "name " << sys.name << "\n";
    out << "d " << sys.d << "\n";
    for (const auto& code : sys.codes) {
        out << "code";
        for (Codeword w : code) out << ' ' << w;
        out << "\n";
    }
    return out.str();
}

std::string serialize_code_system_json(const CodeSystem& sys) {
    nlohmann::json doc;
    if (!sys.name.empty()) doc["name"] = sys.name;
    doc["d"] = sys.d;
    doc["codes"] = nlohmann::json::array();
    for (const auto& code : sys.codes) doc["codes"].push_back(code);
    return doc.dump(2) + "\n";
}

} // namespace udc
