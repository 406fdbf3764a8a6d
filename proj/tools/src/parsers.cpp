#include "parsers.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ubkit::cli {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.begin();
    auto end = s.end();
    while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
    return {begin, end};
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    return value;
}

}  // namespace

SystemShape parse_shape(const std::string& text) {
    std::vector<int> dims;
    for (const std::string& part : split(text, ',')) {
        const std::string t = trim(part);
        if (t.empty()) {
            throw std::invalid_argument("--shape: empty dimension in '" + text + "'");
        }
        dims.push_back(std::stoi(t));
    }
    return SystemShape(dims);
}

cplx parse_complex(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) {
        throw std::invalid_argument("cannot parse empty complex number");
    }
    if (text.back() != 'i' && text.back() != 'I') {
        return {parse_real(text), 0.0};
    }
    std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split_pos = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split_pos = p;
            break;
        }
    }
    if (split_pos == std::string::npos) {
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_real(body)};
    }
    const std::string re_part = body.substr(0, split_pos);
    std::string im_part = body.substr(split_pos);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {parse_real(re_part), parse_real(im_part)};
}

ExtendedComplex parse_extended(const std::string& raw) {
    const std::string text = trim(raw);
    if (text == "inf") {
        return ExtendedComplex::infinity();
    }
    return ExtendedComplex::finite(parse_complex(text));
}

std::vector<IndexTuple> parse_index_set(const std::string& text) {
    std::vector<IndexTuple> tuples;
    for (const std::string& group : split(text, ';')) {
        IndexTuple tuple;
        for (const std::string& entry : split(group, ',')) {
            tuple.push_back(parse_extended(entry));
        }
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

std::vector<cplx> parse_points(const std::string& text) {
    std::vector<cplx> points;
    for (const std::string& entry : split(text, ',')) {
        points.push_back(parse_complex(entry));
    }
    return points;
}

}  // namespace ubkit::cli
