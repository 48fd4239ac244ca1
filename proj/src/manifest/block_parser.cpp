#include "cyclebound/manifest/block_parser.hpp"

#include <cctype>

namespace cyclebound {

const BlockItem *BlockValue::find(std::string_view key) const {
    for (const auto &it : items)
        if (it.key == key)
            return &it;
    return nullptr;
}

std::vector<const BlockItem *> BlockValue::find_all(std::string_view key) const {
    std::vector<const BlockItem *> out;
    for (const auto &it : items)
        if (it.key == key)
            out.push_back(&it);
    return out;
}

namespace {

struct Tok {
    enum class T { String, Number, Ident, Punct, End } type;
    std::string text;
    int line, column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

std::vector<Tok> lex(std::string_view s) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n')
                advance(1);
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
            advance(1);
        } else if (c == '"') {
            int l = line, cc = col;
            std::string text;
            advance(1);
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    advance(1);
                }
                text += s[i];
                advance(1);
            }
            if (i >= s.size())
                throw ParseError("unterminated string", l, cc);
            advance(1);
            out.push_back({Tok::T::String, text, l, cc});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            int l = line, cc = col;
            std::size_t j = i + 1;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.' || s[j] == '/' ||
                                    s[j] == 'e' || s[j] == 'E' ||
                                    ((s[j] == '-' || s[j] == '+') && (s[j - 1] == 'e' || s[j - 1] == 'E'))))
                ++j;
            std::string text(s.substr(i, j - i));
            if (text == "-" || text == "+" || text == ".")
                throw ParseError("unexpected '" + text + "'", l, cc);
            advance(j - i);
            out.push_back({Tok::T::Number, text, l, cc});
        } else if (ident_start(c)) {
            int l = line, cc = col;
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j]))
                ++j;
            std::string text(s.substr(i, j - i));
            advance(j - i);
            out.push_back({Tok::T::Ident, text, l, cc});
        } else if (c == '{' || c == '}' || c == '[' || c == ']' || c == ':') {
            out.push_back({Tok::T::Punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    out.push_back({Tok::T::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

    BlockValue top() {
        BlockValue b;
        b.kind = BlockValue::Kind::Block;
        b.line = b.column = 1;
        while (peek().type != Tok::T::End)
            b.items.push_back(item());
        return b;
    }

private:
    const Tok &peek() const { return toks_[pos_]; }
    Tok take() { return toks_[pos_++]; }
    bool punct(const char *p) const { return peek().type == Tok::T::Punct && peek().text == p; }

    [[noreturn]] void fail(const Tok &t, const std::string &what) {
        if (t.type == Tok::T::End)
            throw ParseError("unexpected end of input, " + what, t.line, t.column);
        throw ParseError("unexpected '" + t.text + "', " + what, t.line, t.column);
    }

    BlockItem item() {
        Tok k = take();
        if (k.type != Tok::T::Ident && k.type != Tok::T::String && k.type != Tok::T::Number)
            fail(k, "expected a key");
        BlockItem it;
        it.key = k.text;
        it.line = k.line;
        it.column = k.column;
        if (punct(":")) {
            take();
            it.value = value();
            return it;
        }
        if (peek().type == Tok::T::Ident || peek().type == Tok::T::String || peek().type == Tok::T::Number)
            it.label = take().text;
        if (!punct("{"))
            fail(peek(), "expected ':' or '{'");
        it.value = block();
        return it;
    }

    BlockValue block() {
        Tok open = take();
        BlockValue b;
        b.kind = BlockValue::Kind::Block;
        b.line = open.line;
        b.column = open.column;
        while (!punct("}")) {
            if (peek().type == Tok::T::End)
                fail(peek(), "expected '}'");
            b.items.push_back(item());
        }
        take();
        return b;
    }

    BlockValue value() {
        const Tok &t = peek();
        if (t.type == Tok::T::Punct && t.text == "{")
            return block();
        if (t.type == Tok::T::Punct && t.text == "[") {
            Tok open = take();
            BlockValue l;
            l.kind = BlockValue::Kind::List;
            l.line = open.line;
            l.column = open.column;
            while (!punct("]")) {
                if (peek().type == Tok::T::End)
                    fail(peek(), "expected ']'");
                l.list.push_back(value());
            }
            take();
            return l;
        }
        Tok v = take();
        BlockValue out;
        out.line = v.line;
        out.column = v.column;
        out.text = v.text;
        switch (v.type) {
        case Tok::T::String:
            out.kind = BlockValue::Kind::String;
            break;
        case Tok::T::Number:
            out.kind = BlockValue::Kind::Number;
            break;
        case Tok::T::Ident:
            out.kind = BlockValue::Kind::Ident;
            break;
        default:
            fail(v, "expected a value");
        }
        return out;
    }

    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

} // namespace

BlockValue parse_blocks(std::string_view text) { return Parser(lex(text)).top(); }

} // namespace cyclebound
