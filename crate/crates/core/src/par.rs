//! Minimal deterministic parallelism: map a function over items on a fixed
//! number of threads and merge results in input order. With `threads <= 1`
//! this is a plain sequential map, which is the default everywhere.

/// Applies `f` to every item, returning results in input order regardless of
/// the thread count.
pub fn par_map_ordered<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let n = items.len();
    let chunk = n.div_ceil(threads);
    let mut out: Vec<Option<R>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (items_chunk, out_chunk) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            let f = &f;
            handles.push(scope.spawn(move || {
                for (item, slot) in items_chunk.iter().zip(out_chunk.iter_mut()) {
                    *slot = Some(f(item));
                }
            }));
        }
        for h in handles {
            h.join().expect("worker thread panicked");
        }
    });
    out.into_iter().map(|r| r.expect("all slots filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_input_order_for_any_thread_count() {
        let items: Vec<u64> = (0..57).collect();
        let seq = par_map_ordered(items.clone(), 1, |x| x * x);
        for t in [2, 3, 8] {
            assert_eq!(par_map_ordered(items.clone(), t, |x| x * x), seq);
        }
    }
}
