public class CrLf {
    void m(android.os.Vibrator v, long ms) {
        v.vibrate(ms);
    }
}
