#include "varjet/expr.hpp"

#include <cctype>

namespace varjet {

namespace {

struct Lexer {
	enum class Tok { number, var, plus, minus, star, caret, lparen, rparen, end };

	const std::string& text;
	size_t pos = 0;

	Tok tok = Tok::end;
	size_t tok_pos = 0;
	Rat number;
	JetVar var{VarKind::even, 1, 0};

	explicit Lexer(const std::string& t) : text(t) { advance(); }

	[[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_pos, msg); }

	unsigned long read_uint()
	{
		if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
			throw ParseError(pos, "expected a number");
		unsigned long v = 0;
		while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
			v = v * 10 + (text[pos] - '0');
			if (v > 1000000000ul)
				throw ParseError(pos, "number too large");
			++pos;
		}
		return v;
	}

	void advance()
	{
		while (pos < text.size() && std::isspace((unsigned char)text[pos]))
			++pos;
		tok_pos = pos;
		if (pos >= text.size()) {
			tok = Tok::end;
			return;
		}
		char c = text[pos];
		if (std::isdigit((unsigned char)c)) {
			unsigned long num = read_uint();
			unsigned long den = 1;
			if (pos < text.size() && text[pos] == '/') {
				++pos;
				den = read_uint();
				if (den == 0)
					throw ParseError(tok_pos, "zero denominator");
			}
			number = Rat(num);
			number /= den;
			tok = Tok::number;
			return;
		}
		if (c == 't') {
			++pos;
			VarKind kind = VarKind::even;
			if (pos < text.size() && text[pos] == 'h') {
				kind = VarKind::odd;
				++pos;
			}
			unsigned long index = read_uint();
			if (pos >= text.size() || text[pos] != '_')
				throw ParseError(pos, "expected '_' in variable");
			++pos;
			unsigned long order = read_uint();
			var = JetVar{kind, int(index), int(order)};
			tok = Tok::var;
			return;
		}
		++pos;
		switch (c) {
		case '+': tok = Tok::plus; return;
		case '-': tok = Tok::minus; return;
		case '*': tok = Tok::star; return;
		case '^': tok = Tok::caret; return;
		case '(': tok = Tok::lparen; return;
		case ')': tok = Tok::rparen; return;
		default: throw ParseError(tok_pos, std::string("unexpected character '") + c + "'");
		}
	}
};

struct Parser {
	Lexer lex;
	const JetContext& ctx;

	Parser(const std::string& text, const JetContext& c) : lex(text), ctx(c) {}

	DiffPoly parse_expr()
	{
		bool negate = false;
		if (lex.tok == Lexer::Tok::minus) {
			negate = true;
			lex.advance();
		}
		DiffPoly r = parse_term();
		if (negate)
			r = -r;
		while (lex.tok == Lexer::Tok::plus || lex.tok == Lexer::Tok::minus) {
			bool minus = lex.tok == Lexer::Tok::minus;
			lex.advance();
			DiffPoly t = parse_term();
			if (minus)
				r -= t;
			else
				r += t;
		}
		return r;
	}

	DiffPoly parse_term()
	{
		DiffPoly r = parse_factor();
		while (lex.tok == Lexer::Tok::star) {
			lex.advance();
			r = r * parse_factor();
		}
		return r;
	}

	DiffPoly parse_factor()
	{
		DiffPoly a = parse_atom();
		if (lex.tok == Lexer::Tok::caret) {
			lex.advance();
			if (lex.tok != Lexer::Tok::number || lex.number.get_den() != 1 || lex.number < 0)
				lex.fail("expected a non-negative integer exponent");
			unsigned long e = lex.number.get_num().get_ui();
			lex.advance();
			DiffPoly r = DiffPoly::constant(ctx, 1);
			for (unsigned long i = 0; i < e && !r.is_zero(); ++i)
				r = r * a;
			return r;
		}
		return a;
	}

	DiffPoly parse_atom()
	{
		switch (lex.tok) {
		case Lexer::Tok::number: {
			DiffPoly r = DiffPoly::constant(ctx, lex.number);
			lex.advance();
			return r;
		}
		case Lexer::Tok::var: {
			JetVar v = lex.var;
			size_t at = lex.tok_pos;
			int limit = v.kind == VarKind::even ? ctx.even_count : ctx.odd_count;
			if (v.index < 1 || v.index > limit)
				throw ParseError(at, "variable index outside declared context");
			lex.advance();
			return DiffPoly::var(ctx, v);
		}
		case Lexer::Tok::lparen: {
			lex.advance();
			DiffPoly r = parse_expr();
			if (lex.tok != Lexer::Tok::rparen)
				lex.fail("expected ')'");
			lex.advance();
			return r;
		}
		default:
			lex.fail("syntax error");
		}
	}
};

} // namespace

DiffPoly parse(const std::string& text, const JetContext& ctx)
{
	Parser p(text, ctx);
	DiffPoly r = p.parse_expr();
	if (p.lex.tok != Lexer::Tok::end)
		p.lex.fail("trailing input");
	return r;
}

std::string print(const DiffPoly& u) { return to_string(u); }

JetContext infer_context(const std::string& text)
{
	// lexes variable tokens only; a permissive context so parse errors
	// surface with real positions later
	int max_index = 1;
	size_t pos = 0;
	while (pos < text.size()) {
		if (text[pos] == 't') {
			size_t p = pos + 1;
			if (p < text.size() && text[p] == 'h')
				++p;
			size_t start = p;
			while (p < text.size() && std::isdigit((unsigned char)text[p]))
				++p;
			if (p > start && p < text.size() && text[p] == '_') {
				int idx = std::stoi(text.substr(start, p - start));
				max_index = std::max(max_index, idx);
			}
			pos = p;
		} else
			++pos;
	}
	return JetContext(max_index, max_index);
}

} // namespace varjet
