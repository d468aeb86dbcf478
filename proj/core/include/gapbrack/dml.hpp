#pragma once

#include <set>
#include <vector>

#include "gapbrack/hermitian.hpp"
#include "gapbrack/potential.hpp"
#include "gapbrack/weights.hpp"

namespace gapbrack {

/// Matrix of the magnetic Laplacian in the orthonormal basis of weighted
/// vertex indicators, ordered by vertex id:
///   [D]_jj = rho(v_j) - (1/m(v_j)) * sum over loops e at v_j of 2 cos(a_e) m_e
///   [D]_jk = -(m(v_j) m(v_k))^{-1/2} * ( sum_{e: j->k} e^{+i a_e} m_e
///                                      + sum_{e: k->j} e^{-i a_e} m_e )
/// The result depends on the edge orientations, not only on the underlying
/// undirected graph.
HermitianMatrix assemble_dml(const WeightedGraph& w, const VectorPotential& alpha);

/// Drop the edges E0, keep every vertex and all remaining weights. The
/// combinatorial scheme survives; anything else degrades to explicit weights.
WeightedGraph virtualise_edges(const WeightedGraph& w, const std::set<EdgeId>& e0);

/// Carrier for the compressed operator on V \ V0. Edges into V0 dangle: they
/// are gone as couplings but still feed the retained diagonal through rho, so
/// no ordinary weighted graph reproduces the compressed matrix.
struct VertexVirtualisedGraph {
    WeightedGraph base;
    std::set<VertexId> virtual_vertices;

    /// Retained vertex ids, ascending.
    std::vector<VertexId> retained() const;
};

/// Mark V0 as virtual. V0 must be a proper subset of the vertices.
VertexVirtualisedGraph virtualise_vertices(const WeightedGraph& w,
                                           const std::set<VertexId>& v0);

/// Principal submatrix of assemble_dml(vv.base, alpha) on the retained rows.
HermitianMatrix assemble_compressed_dml(const VertexVirtualisedGraph& vv,
                                        const VectorPotential& alpha);

/// Assemble and diagonalise; eigenvalues in [-tol', 0) are clamped to zero
/// and the spectrum is checked against [0, 2 rho_inf].
Spectrum spectrum(const WeightedGraph& w, const VectorPotential& alpha,
                  double tol = 1e-10);

/// Spectrum of the compressed operator.
Spectrum compressed_spectrum(const VertexVirtualisedGraph& vv, const VectorPotential& alpha,
                             double tol = 1e-10);

} // namespace gapbrack
