//! Structural morphisms that re-bracket and permute tensor factors.
//!
//! A [`Wire`] is a bracketing of labelled objects. `rewire(from, to)` builds
//! the composite of associators and symmetries taking `from` to `to`, where
//! `to` holds the same labels in any order and bracketing.

use super::{Model, Term};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Wire<O> {
    Leaf(u32, O),
    Pair(Box<Wire<O>>, Box<Wire<O>>),
}

impl<O: Clone> Wire<O> {
    pub fn leaf(label: u32, obj: O) -> Self {
        Wire::Leaf(label, obj)
    }

    pub fn pair(a: Wire<O>, b: Wire<O>) -> Self {
        Wire::Pair(Box::new(a), Box::new(b))
    }

    fn leaves(&self, out: &mut Vec<(u32, O)>) {
        match self {
            Wire::Leaf(l, o) => out.push((*l, o.clone())),
            Wire::Pair(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }

    pub fn object<M: Model<Obj = O> + ?Sized>(&self, model: &M) -> O {
        match self {
            Wire::Leaf(_, o) => o.clone(),
            Wire::Pair(a, b) => model.tensor_obj(&a.object(model), &b.object(model)),
        }
    }
}

/// Right-nested tensor `o₀⊗(o₁⊗(…⊗oₙ))`.
fn right_nested<M: Model + ?Sized>(model: &M, objs: &[M::Obj]) -> M::Obj {
    let (last, init) = objs.split_last().expect("nonempty factor list");
    init.iter()
        .rev()
        .fold(last.clone(), |acc, o| model.tensor_obj(o, &acc))
}

/// `rn(ls)⊗rn(rs) → rn(ls ++ rs)`.
fn merge<M: Model + ?Sized>(model: &M, ls: &[M::Obj], rs: &[M::Obj]) -> Term<M> {
    if ls.len() == 1 {
        let obj = model.tensor_obj(&ls[0], &right_nested(model, rs));
        return Term::Id(obj);
    }
    let head = ls[0].clone();
    let step = Term::AssocInv(
        head.clone(),
        right_nested(model, &ls[1..]),
        right_nested(model, rs),
    );
    let rest = Term::tensor(Term::Id(head), merge(model, &ls[1..], rs));
    Term::compose(rest, step)
}

/// `rn(ls ++ rs) → rn(ls)⊗rn(rs)`.
fn split<M: Model + ?Sized>(model: &M, ls: &[M::Obj], rs: &[M::Obj]) -> Term<M> {
    if ls.len() == 1 {
        let obj = model.tensor_obj(&ls[0], &right_nested(model, rs));
        return Term::Id(obj);
    }
    let head = ls[0].clone();
    let inner = Term::tensor(Term::Id(head.clone()), split(model, &ls[1..], rs));
    let step = Term::Assoc(
        head,
        right_nested(model, &ls[1..]),
        right_nested(model, rs),
    );
    Term::compose(step, inner)
}

fn objs_of<O: Clone>(w: &Wire<O>) -> Vec<O> {
    let mut v = Vec::new();
    w.leaves(&mut v);
    v.into_iter().map(|(_, o)| o).collect()
}

/// `w → rn(leaves(w))`.
fn normalize<M: Model + ?Sized>(model: &M, w: &Wire<M::Obj>) -> Term<M> {
    match w {
        Wire::Leaf(_, o) => Term::Id(o.clone()),
        Wire::Pair(a, b) => {
            let both = Term::tensor(normalize(model, a), normalize(model, b));
            Term::compose(merge(model, &objs_of(a), &objs_of(b)), both)
        }
    }
}

/// `rn(leaves(w)) → w`.
fn denormalize<M: Model + ?Sized>(model: &M, w: &Wire<M::Obj>) -> Term<M> {
    match w {
        Wire::Leaf(_, o) => Term::Id(o.clone()),
        Wire::Pair(a, b) => {
            let both = Term::tensor(denormalize(model, a), denormalize(model, b));
            Term::compose(both, split(model, &objs_of(a), &objs_of(b)))
        }
    }
}

/// Swap of positions `i`, `i+1` inside a right-nested tensor.
fn swap_at<M: Model + ?Sized>(model: &M, objs: &[M::Obj], i: usize) -> Term<M> {
    if i > 0 {
        return Term::tensor(Term::Id(objs[0].clone()), swap_at(model, &objs[1..], i - 1));
    }
    let (x, y) = (objs[0].clone(), objs[1].clone());
    if objs.len() == 2 {
        return Term::Sym(x, y);
    }
    let rest = right_nested(model, &objs[2..]);
    Term::seq(vec![
        Term::Assoc(x.clone(), y.clone(), rest.clone()),
        Term::tensor(Term::Sym(x.clone(), y.clone()), Term::Id(rest.clone())),
        Term::AssocInv(y, x, rest),
    ])
}

/// The structural morphism `from → to`.
pub fn rewire<M: Model + ?Sized>(
    model: &M,
    from: &Wire<M::Obj>,
    to: &Wire<M::Obj>,
) -> Result<Term<M>> {
    let mut src = Vec::new();
    from.leaves(&mut src);
    let mut dst = Vec::new();
    to.leaves(&mut dst);
    let mut sorted_src: Vec<u32> = src.iter().map(|p| p.0).collect();
    let mut sorted_dst: Vec<u32> = dst.iter().map(|p| p.0).collect();
    sorted_src.sort_unstable();
    sorted_dst.sort_unstable();
    if sorted_src != sorted_dst || sorted_src.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Usage(format!(
            "rewire needs matching distinct labels, got {sorted_src:?} and {sorted_dst:?}"
        )));
    }
    let mut steps = vec![normalize(model, from)];
    let mut cur = src;
    let target: Vec<u32> = dst.iter().map(|p| p.0).collect();
    for pos in 0..cur.len() {
        let want = target[pos];
        let mut j = cur.iter().position(|p| p.0 == want).expect("label present");
        while j > pos {
            let objs: Vec<M::Obj> = cur.iter().map(|p| p.1.clone()).collect();
            steps.push(swap_at(model, &objs, j - 1));
            cur.swap(j - 1, j);
            j -= 1;
        }
    }
    steps.push(denormalize(model, to));
    Ok(Term::seq(steps))
}
