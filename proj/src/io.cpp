#include "tubecat/io.hpp"

#include <cctype>
#include <limits>

#include "tubecat/error.hpp"

namespace tubecat::io {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_));
    }

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    void expect_word(std::string_view w) {
        ws();
        if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }
    void finish() {
        if (peek() != '\0') fail("trailing input");
    }

    int integer() {
        ws();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > std::numeric_limits<int>::max()) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a non-negative integer");
        return static_cast<int>(v);
    }

    NCPartition partition() {
        expect_word("NC");
        expect('(');
        const int m = integer();
        expect(',');
        const int n = integer();
        expect(')');
        expect('{');
        std::vector<NCPartition::Block> blocks;
        if (!eat('}')) {
            do {
                NCPartition::Block b{integer()};
                while (eat(',')) b.push_back(integer());
                blocks.push_back(std::move(b));
            } while (eat('|'));
            expect('}');
        }
        return NCPartition::validate(m, n, std::move(blocks));
    }

    TubeObject object() {
        if (!eat('(')) return TubeObject::leaf(integer());
        const int m = integer();
        std::vector<TubeObject> children;
        if (eat(';')) {
            do children.push_back(object());
            while (eat(','));
        }
        expect(')');
        if (static_cast<int>(children.size()) != m) {
            fail("object declares " + std::to_string(m) + " openings but lists " + std::to_string(children.size()));
        }
        return TubeObject::node(std::move(children));
    }

    TubeMorphism morphism(const TubeObject& dom, const TubeObject& cod) {
        if (peek() == 'N') {
            NCPartition p = partition();
            if (!dom.is_leaf() || !cod.is_leaf()) fail("bare partition used where domain or codomain is nested");
            if (dom.arity() != p.m() || cod.arity() != p.n()) {
                fail("partition does not match the block type " + to_text(dom) + " -> " + to_text(cod));
            }
            return TubeMorphism::base(std::move(p));
        }
        expect('[');
        NCPartition p = partition();
        if (dom.arity() != p.m() || cod.arity() != p.n()) fail("outer partition does not match the object arities");
        std::vector<TubeMorphism> inner;
        if (eat(';')) {
            do {
                const std::size_t b = inner.size();
                if (b >= p.block_count()) fail("more inner morphisms than blocks");
                inner.push_back(morphism(block_domain(dom, p, b), block_codomain(cod, p, b)));
            } while (eat(','));
        } else {
            // Omitted inner morphisms are allowed only between units.
            for (std::size_t b = 0; b < p.block_count(); ++b) {
                if (!block_domain(dom, p, b).is_unit() || !block_codomain(cod, p, b).is_unit()) {
                    fail("inner morphisms required");
                }
                inner.emplace_back();
            }
        }
        expect(']');
        if (inner.size() != p.block_count()) fail("one inner morphism per block required");
        return TubeMorphism::nested(dom, cod, std::move(p), std::move(inner));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string body_text(const TubeMorphism& rho) {
    if (rho.is_base()) return to_text(rho.outer());
    std::string out = "[" + to_text(rho.outer());
    for (std::size_t b = 0; b < rho.inner().size(); ++b) {
        out += b ? ", " : "; ";
        out += body_text(rho.inner()[b]);
    }
    return out + "]";
}

[[noreturn]] void json_fail(const std::string& msg) { throw Error(ErrorKind::Parse, "JSON: " + msg); }

int json_int(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > std::numeric_limits<int>::max()) {
        json_fail(std::string(what) + " must be a non-negative integer");
    }
    return j.get<int>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) json_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json body_json(const TubeMorphism& rho) {
    json j = {{"outer", to_json(rho.outer())}};
    if (!rho.is_base()) {
        json inner = json::array();
        for (const auto& phi : rho.inner()) inner.push_back(body_json(phi));
        j["inner"] = std::move(inner);
    }
    return j;
}

TubeMorphism body_from_json(const json& j, const TubeObject& dom, const TubeObject& cod) {
    NCPartition p = partition_from_json(field(j, "outer"));
    if (dom.arity() != p.m() || cod.arity() != p.n()) json_fail("outer partition does not match the object arities");
    std::vector<TubeMorphism> inner;
    if (j.contains("inner")) {
        const json& list = j.at("inner");
        if (!list.is_array() || list.size() != p.block_count()) json_fail("one inner morphism per block required");
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            inner.push_back(body_from_json(list[b], block_domain(dom, p, b), block_codomain(cod, p, b)));
        }
    } else {
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            if (!block_domain(dom, p, b).is_unit() || !block_codomain(cod, p, b).is_unit()) {
                json_fail("inner morphisms required");
            }
            inner.emplace_back();
        }
    }
    return TubeMorphism::nested(dom, cod, std::move(p), std::move(inner));
}

}  // namespace

// -------------------------------------------------------------- partitions

std::string to_text(const NCPartition& p) {
    std::string out = "NC(" + std::to_string(p.m()) + "," + std::to_string(p.n()) + "){";
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        if (b) out += '|';
        const auto& block = p.blocks()[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out + "}";
}

NCPartition parse_partition(std::string_view text) {
    Parser in(text);
    NCPartition p = in.partition();
    in.finish();
    return p;
}

json to_json(const NCPartition& p) {
    return {{"m", p.m()}, {"n", p.n()}, {"blocks", p.blocks()}};
}

NCPartition partition_from_json(const json& j) {
    const int m = json_int(field(j, "m"), "m");
    const int n = json_int(field(j, "n"), "n");
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) json_fail("\"blocks\" must be an array");
    std::vector<NCPartition::Block> out;
    for (const auto& b : blocks) {
        if (!b.is_array()) json_fail("each block must be an array of labels");
        NCPartition::Block block;
        for (const auto& x : b) block.push_back(json_int(x, "label"));
        out.push_back(std::move(block));
    }
    return NCPartition::validate(m, n, std::move(out));
}

// ----------------------------------------------------------------- objects

std::string to_text(const TubeObject& a) {
    if (a.is_leaf()) return std::to_string(a.arity());
    std::string out = "(" + std::to_string(a.arity()) + ";";
    for (int i = 0; i < a.arity(); ++i) {
        if (i) out += ',';
        out += to_text(a.child(i));
    }
    return out + ")";
}

TubeObject parse_object(std::string_view text) {
    Parser in(text);
    TubeObject a = in.object();
    in.finish();
    return a;
}

json to_json(const TubeObject& a) {
    if (a.is_leaf()) return a.arity();
    json children = json::array();
    for (const auto& c : a.children()) children.push_back(to_json(c));
    return {{"m", a.arity()}, {"children", std::move(children)}};
}

TubeObject object_from_json(const json& j) {
    if (j.is_number()) return TubeObject::leaf(json_int(j, "object"));
    const int m = json_int(field(j, "m"), "m");
    const json& children = field(j, "children");
    if (!children.is_array() || static_cast<int>(children.size()) != m) json_fail("\"children\" must list m objects");
    std::vector<TubeObject> out;
    for (const auto& c : children) out.push_back(object_from_json(c));
    return TubeObject::node(std::move(out));
}

// --------------------------------------------------------------- morphisms

std::string to_text(const TubeMorphism& rho) {
    if (rho.is_base()) return to_text(rho.outer());
    return body_text(rho) + " : " + to_text(rho.domain()) + " -> " + to_text(rho.codomain());
}

TubeMorphism parse_morphism(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        NCPartition p = parse_partition(text);
        return TubeMorphism::base(std::move(p));
    }
    Parser types(text.substr(colon + 1));
    const TubeObject dom = types.object();
    types.expect_word("->");
    const TubeObject cod = types.object();
    types.finish();
    Parser body(text.substr(0, colon));
    TubeMorphism rho = body.morphism(dom, cod);
    body.finish();
    return rho;
}

json to_json(const TubeMorphism& rho) {
    json j = body_json(rho);
    j["domain"] = to_json(rho.domain());
    j["codomain"] = to_json(rho.codomain());
    return j;
}

TubeMorphism morphism_from_json(const json& j) {
    if (j.is_object() && j.contains("blocks")) return TubeMorphism::base(partition_from_json(j));
    const TubeObject dom = object_from_json(field(j, "domain"));
    const TubeObject cod = object_from_json(field(j, "codomain"));
    return body_from_json(j, dom, cod);
}

// ------------------------------------------------------------------- misc

json to_json(const IntMatrix& a) {
    json entries = json::array();
    for (const auto& [r, c, v] : a.triplets()) entries.push_back({r, c, v});
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

json to_json(const CheckResult& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    json j = {{"identity", r.identity},
              {"parameters", std::move(params)},
              {"cases", r.cases},
              {"status", r.passed ? "pass" : "fail"}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

}  // namespace tubecat::io
