#pragma once

namespace lofs {

/// How equations between monotone maps are read. In a preorder two
/// parallel maps that are pointwise equivalent are isomorphic 1-cells, so
/// most checks accept them; `strict` demands equal assignments. The two
/// coincide whenever the codomain is a poset.
enum class Equality { up_to_equivalence, strict };

}  // namespace lofs
