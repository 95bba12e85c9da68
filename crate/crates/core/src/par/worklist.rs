//! Bounded multi-producer/multi-consumer pool of search nodes with
//! termination detection.
//!
//! The queue, the count of consumers currently waiting for work, and the
//! done flag live under one lock. A worker can only add while it is not
//! waiting, so once every worker is waiting on an empty queue no further add
//! can happen and the traversal is over.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use crate::node::SearchNode;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorklistStats {
    pub added: u64,
    pub removed: u64,
    /// Entries still queued when the run ended.
    pub remaining: usize,
    /// Largest number of entries ever queued at once.
    pub high_water: usize,
}

#[derive(Debug, Default)]
struct Inner {
    queue: VecDeque<SearchNode>,
    waiting: usize,
    done: bool,
    added: u64,
    removed: u64,
    high_water: usize,
}

#[derive(Debug)]
pub struct GlobalWorklist {
    capacity: usize,
    threshold: usize,
    num_workers: usize,
    backoff: Duration,
    /// Mirror of the queue length for the lock-free threshold gate.
    len: AtomicUsize,
    inner: Mutex<Inner>,
}

impl GlobalWorklist {
    /// `threshold` is clamped to `1..=capacity`.
    pub fn new(capacity: usize, threshold: usize, num_workers: usize, backoff: Duration) -> Self {
        assert!(capacity >= 1, "worklist capacity must be at least 1");
        assert!(num_workers >= 1, "at least one worker is required");
        GlobalWorklist {
            capacity,
            threshold: threshold.clamp(1, capacity),
            num_workers,
            backoff,
            len: AtomicUsize::new(0),
            inner: Mutex::new(Inner::default()),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Current number of entries; may be stale by the time it is used.
    #[inline]
    pub fn len(&self) -> usize {
        self.len.load(Ordering::Relaxed)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The donation gate: true while the pool holds fewer entries than the
    /// threshold.
    #[inline]
    pub fn wants_work(&self) -> bool {
        self.len() < self.threshold
    }

    /// Hands `node` to the pool, or gives it back if the pool is full.
    pub fn try_add(&self, node: SearchNode) -> Result<(), SearchNode> {
        let mut inner = self.inner.lock().unwrap();
        if inner.queue.len() >= self.capacity {
            return Err(node);
        }
        inner.queue.push_back(node);
        inner.added += 1;
        let len = inner.queue.len();
        inner.high_water = inner.high_water.max(len);
        self.len.store(len, Ordering::Relaxed);
        Ok(())
    }

    /// Blocks until an entry is available (returned) or the traversal is
    /// over (`None`). The traversal is over when the pool is empty and all
    /// workers are waiting, or when `stop` returns true. Between attempts the
    /// caller sleeps for the configured backoff.
    pub fn remove_or_done(&self, stop: impl Fn() -> bool) -> Option<SearchNode> {
        let mut registered = false;
        loop {
            {
                let mut inner = self.inner.lock().unwrap();
                if let Some(node) = inner.queue.pop_front() {
                    if registered {
                        inner.waiting -= 1;
                    }
                    inner.removed += 1;
                    self.len.store(inner.queue.len(), Ordering::Relaxed);
                    return Some(node);
                }
                if inner.done {
                    return None;
                }
                if !registered {
                    inner.waiting += 1;
                    registered = true;
                }
                if inner.waiting == self.num_workers {
                    inner.done = true;
                    return None;
                }
            }
            if stop() {
                return None;
            }
            if self.backoff.is_zero() {
                std::thread::yield_now();
            } else {
                std::thread::sleep(self.backoff);
            }
        }
    }

    /// True once termination has been detected.
    pub fn is_done(&self) -> bool {
        self.inner.lock().unwrap().done
    }

    pub fn stats(&self) -> WorklistStats {
        let inner = self.inner.lock().unwrap();
        WorklistStats {
            added: inner.added,
            removed: inner.removed,
            remaining: inner.queue.len(),
            high_water: inner.high_water,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;
    use std::sync::atomic::AtomicBool;
    use std::sync::Arc;

    fn node() -> SearchNode {
        SearchNode::root(&path(3))
    }

    #[test]
    fn add_accepts_below_capacity() {
        let wl = GlobalWorklist::new(2, 4, 1, Duration::ZERO);
        assert_eq!(wl.threshold(), 2);
        assert!(wl.wants_work());
        assert!(wl.try_add(node()).is_ok());
        assert!(wl.try_add(node()).is_ok());
        assert!(!wl.wants_work());
        assert!(wl.try_add(node()).is_err());
        assert_eq!(wl.len(), 2);
    }

    #[test]
    fn single_worker_empty_is_done() {
        let wl = GlobalWorklist::new(4, 4, 1, Duration::ZERO);
        assert!(wl.remove_or_done(|| false).is_none());
        assert!(wl.is_done());
    }

    #[test]
    fn fifo_order() {
        let g = path(3);
        let wl = GlobalWorklist::new(4, 4, 1, Duration::ZERO);
        let a = SearchNode::root(&g);
        let mut b = a.clone();
        b.remove_vertex_into_cover(&g, 1);
        wl.try_add(a.clone()).unwrap();
        wl.try_add(b.clone()).unwrap();
        assert_eq!(wl.remove_or_done(|| false), Some(a));
        assert_eq!(wl.remove_or_done(|| false), Some(b));
    }

    #[test]
    fn root_goes_to_exactly_one_worker() {
        let wl = Arc::new(GlobalWorklist::new(4, 4, 8, Duration::from_micros(20)));
        wl.try_add(node()).unwrap();
        let got: usize = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|_| {
                    s.spawn(|| {
                        let mut taken = 0;
                        while wl.remove_or_done(|| false).is_some() {
                            taken += 1;
                        }
                        taken
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).sum()
        });
        assert_eq!(got, 1);
        assert!(wl.is_done());
    }

    #[test]
    fn stop_signal_releases_waiters() {
        let wl = GlobalWorklist::new(4, 4, 5, Duration::from_micros(50));
        let flag = AtomicBool::new(false);
        std::thread::scope(|s| {
            let handles: Vec<_> =
                (0..4).map(|_| s.spawn(|| wl.remove_or_done(|| flag.load(Ordering::Relaxed)))).collect();
            std::thread::sleep(Duration::from_millis(20));
            flag.store(true, Ordering::Relaxed);
            for h in handles {
                assert!(h.join().unwrap().is_none());
            }
        });
    }

    #[test]
    fn concurrent_adds_respect_capacity() {
        for _ in 0..50 {
            let wl = GlobalWorklist::new(8, 8, 16, Duration::ZERO);
            for _ in 0..7 {
                wl.try_add(node()).unwrap();
            }
            let accepted: usize = std::thread::scope(|s| {
                let handles: Vec<_> = (0..16).map(|_| s.spawn(|| wl.try_add(node()).is_ok() as usize)).collect();
                handles.into_iter().map(|h| h.join().unwrap()).sum()
            });
            assert_eq!(accepted, 1);
            assert_eq!(wl.stats().high_water, 8);
            assert_eq!(wl.len(), 8);
        }
    }
}
