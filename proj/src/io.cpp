#include "luroth/io.hpp"

#include <sstream>

namespace luroth {

namespace io_detail {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace io_detail

BatchHeader read_batch_header(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    BatchHeader h;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tok = io_detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "family" && tok.size() == 2) h.family = tok[1];
        else if (tok[0] == "seed" && tok.size() == 2) h.seed = std::stoull(tok[1]);
        else if (tok[0] == "prime" && tok.size() == 2) h.prime = std::stoull(tok[1]);
        else if (tok[0] == "field" && tok.size() == 2 && tok[1] == "rational") h.prime.reset();
        else if (tok[0] == "count" && tok.size() == 2) {
            h.count = std::stoull(tok[1]);
            return h;
        } else {
            throw ParseError(path, lineno, "unexpected header line '" + line + "'");
        }
    }
    throw ParseError(path, lineno, "missing count header");
}

}  // namespace luroth
